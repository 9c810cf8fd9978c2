import io
import json

import numpy as np
import pytest

from polythresh.io import table
from polythresh.io.table import (
    COLUMNS,
    SCHEMA_VERSION,
    SweepReader,
    SweepRow,
    SweepWriter,
    TableParsingError,
    dump_points,
    load_points
)


def _row(**changes) -> SweepRow:
    values = dict(sweep='beta-volume', model='beta', quantity='volume-ratio', n=3, log_N=4.5,
                  N=2147, mean=0.123456789012345678, std_err=1e-3, n_outer=200, n_inner=500,
                  seed=12345678901234, predicted_side='below', beta=-0.5, eps=0.1,
                  product_below=0.25, bound_lower=0.0625, bound_upper=0.75)
    values.update(changes)
    return SweepRow(**values)


ROWS = [
    _row(),
    _row(model='beta-prime', quantity='content', beta=3.0, sigma=2.0, eps=None, R=1.5,
         excess_above=2.5, predicted_side='above', violation=True),
    _row(mean=1.0 / 3.0, std_err=0.0, bound_lower=None, bound_upper=None)
]


@pytest.mark.parametrize('format', ['csv', 'json'])
def test_round_trip(format):
    assert table.loads(table.dumps(ROWS, format), format) == ROWS


@pytest.mark.parametrize('format', ['csv', 'json'])
def test_dump_is_deterministic(format):
    assert table.dumps(ROWS, format) == table.dumps(list(ROWS), format)


def test_csv_layout():
    lines = table.dumps(ROWS[:1]).splitlines()

    assert lines[0].split(',') == list(COLUMNS)
    assert lines[1].startswith(f'{SCHEMA_VERSION},beta-volume,beta,volume-ratio,3,')

    cells = dict(zip(COLUMNS, lines[1].split(',')))
    assert cells['sigma'] == ''
    assert cells['violation'] == 'false'
    assert float(cells['mean']) == ROWS[0].mean


def test_json_layout():
    records = json.loads(table.dumps(ROWS[1:2], 'json'))

    assert records[0]['schema_version'] == SCHEMA_VERSION
    assert records[0]['violation'] is True
    assert records[0]['eps'] is None


def test_numpy_scalars_are_written_plainly():
    row = _row(n=np.int64(3), mean=np.float64(0.5))

    assert table.loads(table.dumps([row], 'json'), 'json') == [_row(mean=0.5)]
    assert table.loads(table.dumps([row])) == [_row(mean=0.5)]


def test_file_functions():
    buffer = io.StringIO()
    table.dump(ROWS, buffer, 'csv')
    buffer.seek(0)

    assert table.load(buffer, 'csv') == ROWS


def test_writer_and_reader_reject_unknown_format():
    with pytest.raises(ValueError):
        SweepWriter('xml')

    with pytest.raises(ValueError):
        SweepReader('xml')


def test_writer_rejects_other_objects():
    with pytest.raises(TypeError):
        SweepWriter().dumps([{'mean': 1.0}])


def test_reader_rejects_missing_header():
    with pytest.raises(TableParsingError):
        table.loads('')


def test_reader_rejects_unexpected_header():
    data = table.dumps(ROWS).replace('predicted_side', 'side', 1)

    with pytest.raises(TableParsingError):
        table.loads(data)


def test_reader_rejects_other_schema_version():
    header, line = table.dumps(ROWS[:1]).splitlines()

    with pytest.raises(TableParsingError, match='schema version'):
        table.loads(f'{header}\n9{line[1:]}\n')

    records = json.loads(table.dumps(ROWS[:1], 'json'))
    records[0]['schema_version'] = 2

    with pytest.raises(TableParsingError, match='schema version'):
        table.loads(json.dumps(records), 'json')


def test_reader_rejects_short_lines():
    header, line = table.dumps(ROWS[:1]).splitlines()

    with pytest.raises(TableParsingError, match='line 2'):
        table.loads(f'{header}\n{line.rsplit(",", 1)[0]}\n')


def test_reader_rejects_bad_values():
    header, line = table.dumps(ROWS[:1]).splitlines()

    with pytest.raises(TableParsingError, match='column violation'):
        table.loads(f'{header}\n{line.rsplit(",", 1)[0]},maybe\n')

    with pytest.raises(TableParsingError, match='column n '):
        table.loads(f'{header}\n{line.replace(",3,", ",three,", 1)}\n')


def test_json_reader_rejects_bad_documents():
    with pytest.raises(TableParsingError):
        table.loads('{"mean": 1.0}', 'json')

    with pytest.raises(TableParsingError):
        table.loads('[1, 2]', 'json')

    with pytest.raises(TableParsingError):
        table.loads('[{', 'json')

    records = json.loads(table.dumps(ROWS[:1], 'json'))
    records[0]['colour'] = 'red'

    with pytest.raises(TableParsingError):
        table.loads(json.dumps(records), 'json')


def test_points_round_trip():
    points = np.array([[0.1, -2.5e-300, 3.0], [1.0 / 3.0, 7.0, -0.0]])
    buffer = io.StringIO()
    dump_points(points, buffer)
    buffer.seek(0)

    assert np.array_equal(load_points(buffer), points)


def test_points_format():
    buffer = io.StringIO()
    dump_points(np.array([[0.5, -1.0], [2.0, 0.25]]), buffer)

    assert buffer.getvalue() == '0.5 -1\n2 0.25\n'


def test_load_points_skips_blank_lines():
    assert load_points(io.StringIO('1 2\n\n3 4\n')).tolist() == [[1.0, 2.0], [3.0, 4.0]]
    assert load_points(io.StringIO('')).size == 0


def test_load_points_rejects_bad_files():
    with pytest.raises(TableParsingError, match='line 2'):
        load_points(io.StringIO('1 2\n1 x\n'))

    with pytest.raises(TableParsingError, match='dimensions'):
        load_points(io.StringIO('1 2\n1 2 3\n'))


def test_dump_points_rejects_flat_arrays():
    with pytest.raises(ValueError):
        dump_points(np.array([1.0, 2.0]), io.StringIO())
