"""
Rendering of result rows and records, and export of threshold workbooks.
"""

import json
import logging
from typing import Any, Dict, List, Sequence

import pandas as pd
from openpyxl import Workbook
from openpyxl.styles import Alignment, Border, Font, PatternFill, Side
from openpyxl.utils import get_column_letter

from errors import ConfigError

MISSING = "n/a"


class FileHandler:

    def render_rows(self, rows: List[Dict[str, Any]], columns: Sequence[str], fmt: str) -> str:
        """
        Render rows as plain text, CSV or JSON.

        Args:
            rows: One dict per row
            columns: Column order
            fmt: "plain", "csv" or "json"

        Returns:
            Rendered text ending with a newline
        """
        if fmt == "json":
            records = [{col: row.get(col) for col in columns} for row in rows]
            return json.dumps(records, ensure_ascii=False) + "\n"
        df = pd.DataFrame(rows, columns=list(columns), dtype=object)
        if fmt == "csv":
            return df.to_csv(index=False, lineterminator="\n")
        if fmt == "plain":
            if df.empty:
                return "(none)\n"
            return df.fillna(MISSING).to_string(index=False) + "\n"
        raise ConfigError(f"unknown output format {fmt!r}")

    def render_record(self, record: Dict[str, Any], fmt: str) -> str:
        """Render a single record; plain output is one "key: value" line per field."""
        if fmt == "json":
            return json.dumps(record, sort_keys=True, ensure_ascii=False) + "\n"
        if fmt == "csv":
            flat = {key: (";".join(value) if isinstance(value, list) else value)
                    for key, value in record.items()}
            return self.render_rows([flat], list(flat), "csv")
        if fmt == "plain":
            return "".join(f"{key}: {MISSING if value is None else value}\n"
                           for key, value in record.items())
        raise ConfigError(f"unknown output format {fmt!r}")

    def write_text(self, text: str, output_path: str) -> None:
        try:
            with open(output_path, 'w', encoding='utf-8') as file:
                file.write(text)
            logging.info(f"Wrote {output_path}")
        except IOError as e:
            raise RuntimeError(f"Failed to write {output_path}: {e}")

    def write_threshold_workbook(self, rows: List[Dict[str, Any]], columns: Sequence[str],
                                 file_path: str) -> None:
        """Write a threshold table to a styled Excel sheet."""
        wb = Workbook()
        ws = wb.active
        ws.title = "thresholds"

        font_bold = Font(bold=True, size=12)
        center_alignment = Alignment(horizontal="center", vertical="center")
        thin_side = Side(style='thin', color='000000')
        thin_border = Border(left=thin_side, right=thin_side, top=thin_side, bottom=thin_side)
        header_fill = PatternFill(start_color="C0C0C0", end_color="C0C0C0", fill_type="solid")
        key_fill = PatternFill(start_color="DDDDDD", end_color="DDDDDD", fill_type="solid")
        zero_fill = PatternFill(start_color="C6EFCE", end_color="C6EFCE", fill_type="solid")
        value_fill = PatternFill(start_color="FFEB9C", end_color="FFEB9C", fill_type="solid")

        for col_idx, name in enumerate(columns, start=1):
            cell = ws.cell(row=1, column=col_idx, value=name)
            cell.font = font_bold
            cell.fill = header_fill
            cell.alignment = center_alignment
            cell.border = thin_border
            ws.column_dimensions[get_column_letter(col_idx)].width = 14

        for row_idx, row in enumerate(rows, start=2):
            for col_idx, name in enumerate(columns, start=1):
                cell = ws.cell(row=row_idx, column=col_idx, value=row.get(name))
                cell.alignment = center_alignment
                cell.border = thin_border
                if name == "threshold":
                    # Threshold 0 means every monomial of the class is Gotzmann
                    cell.fill = zero_fill if row.get(name) == 0 else value_fill
                else:
                    cell.fill = key_fill

        ws.freeze_panes = "A2"
        wb.save(file_path)
        logging.info(f"Threshold workbook saved to {file_path}")
