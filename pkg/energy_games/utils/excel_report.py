"""
This module provides the BenchWorkbook class to store benchmark tables in
Excel files with .xlsx format and to read them back.

Classes:
--------
BenchWorkbook

Methods:
--------
write_rows(rows: Sequence[Sequence[Any]]) -> None:
    Writes the header and the rows to the benchmark sheet and saves the file.

read_rows(start_row: int = 2) -> List[List[Any]]:
    Reads the data rows back from the benchmark sheet.

get_row_count() -> int:
    Returns the number of data rows in the benchmark sheet.
"""
from pathlib import Path
from typing import Any, List, Sequence, Union

from openpyxl import Workbook, load_workbook


class BenchWorkbook:
    """
    A class to write and read benchmark tables in .xlsx workbooks.

    Attributes:
    -----------
    file_path : Path
        The path to the Excel file.
    sheet_name : str
        The sheet holding the table.
    header : Sequence[str]
        The column titles written in the first row.
    """

    def __init__(self, file_path: Union[str, Path], header: Sequence[str], sheet_name: str = "bench"):
        """
        Initializes the BenchWorkbook with the path to the Excel file.

        Parameters:
        -----------
        file_path : Union[str, Path]
            The path to the Excel file. It is created on the first write.
        header : Sequence[str]
            The column titles.
        sheet_name : str, optional
            The name of the sheet (default is "bench").
        """
        self.file_path = Path(file_path)
        self.header = list(header)
        self.sheet_name = sheet_name

    def write_rows(self, rows: Sequence[Sequence[Any]]) -> None:
        """
        Writes the header and the rows to the sheet, replacing an existing
        sheet of the same name, and saves the workbook.

        Parameters:
        -----------
        rows : Sequence[Sequence[Any]]
            The table rows, in header column order.
        """
        if self.file_path.exists():
            workbook = load_workbook(filename=self.file_path)
            if self.sheet_name in workbook.sheetnames:
                del workbook[self.sheet_name]
            sheet = workbook.create_sheet(self.sheet_name)
        else:
            workbook = Workbook()
            sheet = workbook.active
            sheet.title = self.sheet_name

        sheet.append(self.header)
        for row in rows:
            if len(row) != len(self.header):
                raise ValueError(f"Row {list(row)} does not match the {len(self.header)} header columns.")
            sheet.append(list(row))
        workbook.save(self.file_path)

    def read_rows(self, start_row: int = 2) -> List[List[Any]]:
        """
        Reads the data rows from the sheet.

        Parameters:
        -----------
        start_row : int, optional
            The row to start reading from (default is 2, just below the header).

        Returns:
        --------
        List[List[Any]]
            A list of lists where each inner list holds the cells of one row.
        """
        workbook = load_workbook(filename=self.file_path, read_only=True)
        try:
            sheet = workbook[self.sheet_name]
            return [list(row) for row in sheet.iter_rows(min_row=start_row, values_only=True)
                    if any(cell is not None for cell in row)]
        finally:
            workbook.close()

    def get_row_count(self) -> int:
        """
        Returns the number of data rows in the sheet.

        Returns:
        --------
        int
            The number of rows below the header.
        """
        return len(self.read_rows())
