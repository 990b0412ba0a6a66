import json
import logging
import os
from typing import Dict

import pandas as pd

__all__ = ['write_table', 'write_metadata', 'write_gnuplot', 'GNUPLOT_TEMPLATES']

logger = logging.getLogger(__name__)

FLOAT_FORMAT = '%.12g'

LAMBDA_SCRIPT = '''set datafile separator ','
set key autotitle columnhead
set xlabel 'x'
set ylabel 'f(x)'
set xrange [-pi:pi]
plot '{table}' using 1:2 with lines title 'f', \\
     '{table}' using 1:($4 > 0 ? $2 : 1/0) with lines linewidth 3 title 'Λ'
'''

SCATTER_SCRIPT = '''set datafile separator ','
set key autotitle columnhead
set xlabel 'Γ_C'
set ylabel 'Γ_R'
set size square
plot '{table}' using 5:6 with points pointtype 7 title 'matched pairs', \\
     x with lines dashtype 2 title 'Γ_R = Γ_C', \\
     {ratio_bound:.12g} * x with lines title 'ratio bound'
'''

CONVERGENCE_SCRIPT = '''set datafile separator ','
set key autotitle columnhead
set logscale xy
set xlabel 'N'
set ylabel '{ylabel}'
plot '{table}' using 1:{column} with points pointtype 7 title 'chain vs ring', \\
     {scale:.12g} / x with lines dashtype 2 title 'N^-1'
'''

GNUPLOT_TEMPLATES = {
    'lambda': LAMBDA_SCRIPT,
    'scatter': SCATTER_SCRIPT,
    'convergence': CONVERGENCE_SCRIPT,
}


def write_table(table: pd.DataFrame, directory: str, name: str, metadata: Dict = None) -> str:
    os.makedirs(directory, exist_ok=True)
    path = os.path.join(directory, f'{name}.csv')
    table.to_csv(path, index=False, float_format=FLOAT_FORMAT)
    logger.info('Wrote %d row(s) to %s', len(table), path)
    if metadata is not None:
        write_metadata(metadata, os.path.join(directory, f'{name}.json'))
    return path


def write_metadata(metadata: Dict, path: str):
    with open(path, 'w') as f:
        json.dump(metadata, f, sort_keys=True, indent=4, separators=(',', ': '))


def write_gnuplot(kind: str, directory: str, table_name: str, **values) -> str:
    path = os.path.join(directory, f'{table_name}.gp')
    with open(path, 'w') as f:
        f.write(GNUPLOT_TEMPLATES[kind].format(table=f'{table_name}.csv', **values))
    logger.info('Wrote gnuplot script %s', path)
    return path
