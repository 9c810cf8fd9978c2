import csv
import io
import json
from dataclasses import asdict, dataclass, fields
from typing import Any, Callable, Dict, Iterable, List, Optional, TextIO, Tuple

import numpy as np

from polythresh.core.errors import PolythreshError

SCHEMA_VERSION = 1

FORMATS = ('csv', 'json')


class TableError(PolythreshError):
    pass


class TableParsingError(TableError):
    pass


@dataclass(frozen=True)
class SweepRow:
    """
    One result of a sweep: grid coordinates, the Monte Carlo estimate, the analytic
    diagnostics and the side of the threshold they predict. Coordinates that do not
    apply to the row's model are None.
    """
    sweep: str
    model: str
    quantity: str
    n: int
    log_N: float
    N: int
    mean: float
    std_err: float
    n_outer: int
    n_inner: int
    seed: int
    predicted_side: str
    beta: Optional[float] = None
    sigma: Optional[float] = None
    eps: Optional[float] = None
    R: Optional[float] = None
    delta: Optional[float] = None
    product_below: Optional[float] = None
    excess_above: Optional[float] = None
    bound_lower: Optional[float] = None
    bound_upper: Optional[float] = None
    violation: bool = False


def _format_float(value: float) -> str:
    return format(value, '.17g')


def _parse_bool(text: str) -> bool:
    if text == 'true':
        return True

    if text == 'false':
        return False

    raise ValueError(f'invalid boolean {text!r}')


# Converters to and from CSV cells for each column kind
_KINDS: Dict[str, Tuple[Callable[[Any], str], Callable[[str], Any]]] = {
    'str': (str, str),
    'int': (str, int),
    'float': (_format_float, float),
    'optional': (lambda value: '' if value is None else _format_float(value),
                 lambda text: None if text == '' else float(text)),
    'bool': (lambda value: 'true' if value else 'false', _parse_bool)
}

_COLUMN_KINDS: Dict[str, str] = {
    'sweep': 'str',
    'model': 'str',
    'quantity': 'str',
    'n': 'int',
    'log_N': 'float',
    'N': 'int',
    'mean': 'float',
    'std_err': 'float',
    'n_outer': 'int',
    'n_inner': 'int',
    'seed': 'int',
    'predicted_side': 'str',
    'violation': 'bool'
}

COLUMNS: Tuple[str, ...] = ('schema_version',) + tuple(field.name for field in fields(SweepRow))


def _kind(column: str) -> str:
    return _COLUMN_KINDS.get(column, 'optional')


def _plain(value: Any) -> Any:
    # numpy scalars are written as their Python equivalents
    if isinstance(value, np.generic):
        return value.item()

    return value


class SweepWriter:
    """
    Writer of sweep rows to CSV or JSON. Both formats carry a ``schema_version`` field.
    CSV decimals are written with 17 significant digits, which round-trips every double;
    the same rows always produce the same bytes.
    """
    __slots__ = ('_format',)

    def __init__(self, format: str = 'csv'):
        """
        Initializes SweepWriter object.

        :param format: 'csv' or 'json' (default: 'csv')
        """
        if format not in FORMATS:
            raise ValueError(f'format must be one of {", ".join(FORMATS)}')

        self._format = format

    def _row_dict(self, row: SweepRow) -> Dict[str, Any]:
        if not isinstance(row, SweepRow):
            raise TypeError('rows must be SweepRow objects')

        record: Dict[str, Any] = {'schema_version': SCHEMA_VERSION}
        record.update({key: _plain(value) for key, value in asdict(row).items()})
        return record

    def dump(self, rows: Iterable[SweepRow], file: TextIO) -> None:
        """
        Writes rows to a text file.

        :param rows: rows to write
        :param file: text file-like object
        :return: None
        """
        records = [self._row_dict(row) for row in rows]

        if self._format == 'json':
            json.dump(records, file, indent=2, allow_nan=True)
            file.write('\n')
            return

        writer = csv.writer(file, lineterminator='\n')
        writer.writerow(COLUMNS)

        for record in records:
            writer.writerow([_KINDS[_kind(column)][0](record[column]) if column != 'schema_version'
                             else str(SCHEMA_VERSION) for column in COLUMNS])

    def dumps(self, rows: Iterable[SweepRow]) -> str:
        """
        Serializes rows and returns them as a string.

        :param rows: rows to write
        :return: serialized rows
        """
        with io.StringIO() as file:
            self.dump(rows, file)
            return file.getvalue()


class SweepReader:
    """
    Reader of sweep rows written by SweepWriter.
    """
    __slots__ = ('_format',)

    def __init__(self, format: str = 'csv'):
        if format not in FORMATS:
            raise ValueError(f'format must be one of {", ".join(FORMATS)}')

        self._format = format

    @staticmethod
    def _check_version(value: Any) -> None:
        if str(value) != str(SCHEMA_VERSION):
            raise TableParsingError(f'Unsupported sweep table: schema version is {value!r}')

    @staticmethod
    def _build(record: Dict[str, Any]) -> SweepRow:
        try:
            return SweepRow(**{key: value for key, value in record.items() if key != 'schema_version'})
        except TypeError as e:
            raise TableParsingError(f'Invalid sweep table: {e}') from None

    def _parse_csv(self, file: TextIO) -> List[SweepRow]:
        reader = csv.reader(file)

        try:
            header = next(reader)
        except StopIteration:
            raise TableParsingError('Invalid sweep table: missing header') from None

        if tuple(header) != COLUMNS:
            raise TableParsingError('Invalid sweep table: unexpected header')

        rows = []
        for line, cells in enumerate(reader, start=2):
            if len(cells) != len(COLUMNS):
                raise TableParsingError(f'Invalid sweep table: line {line} has {len(cells)} cells')

            self._check_version(cells[0])

            record = {}
            for column, cell in zip(COLUMNS[1:], cells[1:]):
                try:
                    record[column] = _KINDS[_kind(column)][1](cell)
                except ValueError:
                    raise TableParsingError(f'Invalid sweep table: bad value {cell!r} '
                                            f'in column {column} on line {line}') from None

            rows.append(self._build(record))

        return rows

    def _parse_json(self, file: TextIO) -> List[SweepRow]:
        try:
            records = json.load(file)
        except json.JSONDecodeError as e:
            raise TableParsingError(f'Invalid sweep table: {e}') from None

        if not isinstance(records, list) or not all(isinstance(record, dict) for record in records):
            raise TableParsingError('Invalid sweep table: expected a list of objects')

        rows = []
        for record in records:
            self._check_version(record.get('schema_version'))
            rows.append(self._build(record))

        return rows

    def load(self, file: TextIO) -> List[SweepRow]:
        """
        Reads rows from a text file.

        :param file: text file-like object
        :return: parsed rows
        """
        if self._format == 'json':
            return self._parse_json(file)

        return self._parse_csv(file)

    def loads(self, data: str) -> List[SweepRow]:
        """
        Reads rows from a string.

        :param data: serialized rows
        :return: parsed rows
        """
        with io.StringIO(data) as file:
            return self.load(file)


def dump(rows: Iterable[SweepRow], file: TextIO, format: str = 'csv') -> None:
    """
    Writes sweep rows to a text file.

    :param rows: rows to write
    :param file: text file-like object
    :param format: 'csv' or 'json' (default: 'csv')
    :return: None
    """
    SweepWriter(format).dump(rows, file)


def dumps(rows: Iterable[SweepRow], format: str = 'csv') -> str:
    """
    Serializes sweep rows.

    :param rows: rows to write
    :param format: 'csv' or 'json' (default: 'csv')
    :return: serialized rows
    """
    return SweepWriter(format).dumps(rows)


def load(file: TextIO, format: str = 'csv') -> List[SweepRow]:
    """
    Reads sweep rows from a text file.

    :param file: text file-like object
    :param format: 'csv' or 'json' (default: 'csv')
    :return: parsed rows
    """
    return SweepReader(format).load(file)


def loads(data: str, format: str = 'csv') -> List[SweepRow]:
    """
    Reads sweep rows from a string.

    :param data: serialized rows
    :param format: 'csv' or 'json' (default: 'csv')
    :return: parsed rows
    """
    return SweepReader(format).loads(data)


def dump_points(points: np.ndarray, file: TextIO) -> None:
    """
    Writes points one per line as space-separated decimals with 17 significant digits.

    >>> buffer = io.StringIO()
    >>> dump_points(np.array([[0.5, -1.0]]), buffer)
    >>> buffer.getvalue()
    '0.5 -1\\n'

    :param points: array of shape (count, n)
    :param file: text file-like object
    :return: None
    """
    array = np.asarray(points, dtype=float)

    if array.ndim != 2:
        raise ValueError('points must be a 2-dimensional array')

    for point in array:
        file.write(' '.join(_format_float(float(value)) for value in point))
        file.write('\n')


def load_points(file: TextIO) -> np.ndarray:
    """
    Reads points written by ``dump_points``.

    :param file: text file-like object
    :return: array of shape (count, n)
    """
    rows = []
    for line, text in enumerate(file, start=1):
        if not text.strip():
            continue

        try:
            rows.append([float(token) for token in text.split()])
        except ValueError:
            raise TableParsingError(f'Invalid point file: bad value on line {line}') from None

    if rows and len({len(row) for row in rows}) != 1:
        raise TableParsingError('Invalid point file: points have different dimensions')

    return np.array(rows, dtype=float)
