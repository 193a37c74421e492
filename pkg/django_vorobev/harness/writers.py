#!coding=utf8
import csv
import json
from fractions import Fraction

import numpy as np
from xlsxwriter import Workbook

FLOAT_FORMAT = '{:.9g}'


def format_value(value):
    """Texto canónico de una celda: 9 cifras significativas, true/false"""
    if isinstance(value, (bool, np.bool_)):
        return 'true' if value else 'false'
    if isinstance(value, (Fraction, float, np.floating)):
        return FLOAT_FORMAT.format(float(value))
    if value is None:
        return ''
    return str(value)


def plain_value(value):
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (Fraction, np.floating)):
        return float(value)
    if isinstance(value, np.integer):
        return int(value)
    return value


class CSVTableWriter:
    def __init__(self, output, headers):
        self.headers = headers
        self.writer = csv.writer(output, lineterminator='\n')

    def write_rows(self, rows):
        self.writer.writerow(self.headers)
        for row in rows:
            self.writer.writerow([format_value(row.get(header)) for header in self.headers])


class XLSXTableWriter:
    def __init__(self, output, headers):
        self.headers = headers
        self.workbook = Workbook(output, {'in_memory': True, 'nan_inf_to_errors': True})

    def write_rows(self, rows, name=None):
        worksheet = self.workbook.add_worksheet(name)
        for column, header in enumerate(self.headers):
            worksheet.write(0, column, header)
        for row, values in enumerate(rows):
            for column, header in enumerate(self.headers):
                worksheet.write(row + 1, column, plain_value(values.get(header)))
        self.workbook.close()


def write_csv(path, headers, rows):
    with open(path, 'w', newline='') as f:
        CSVTableWriter(f, headers).write_rows(rows)


def write_xlsx(path, headers, rows, name=None):
    XLSXTableWriter(path, headers).write_rows(rows, name)


def _json_default(value):
    plain = plain_value(value)
    return str(value) if plain is value else plain


def write_json(path, data):
    with open(path, 'w') as f:
        json.dump(data, f, indent=2, sort_keys=True, default=_json_default)
        f.write('\n')
