from typing import Sequence

from . import table
from .table import SweepRow, SweepWriter, SweepReader, TableError, TableParsingError, SCHEMA_VERSION

__all__: Sequence[str] = [
    'table',
    'SCHEMA_VERSION',
    'SweepRow',
    'SweepWriter',
    'SweepReader',
    'TableError',
    'TableParsingError'
]
