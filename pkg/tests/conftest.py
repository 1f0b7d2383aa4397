import logging

import pytest

from energy_games.graph.instance_file import parse_instance

TWO_CYCLE = "p eg 2 2 1\no 1 A\no 2 A\ne 1 2 -1\ne 2 1 1\n"


@pytest.fixture
def two_cycle_text():
    return TWO_CYCLE


@pytest.fixture
def two_cycle():
    return parse_instance(TWO_CYCLE)


@pytest.fixture
def instance_file(tmp_path):
    """Writes instance text to a file and returns its path as a string."""
    def write(text, name="instance.txt"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return write


@pytest.fixture(autouse=True)
def reset_package_logger():
    """Removes the stderr handler the command line installs."""
    yield
    logger = logging.getLogger("energy_games")
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
    logger.propagate = True
    logger.setLevel(logging.NOTSET)
