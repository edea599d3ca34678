import logging
from pathlib import Path

import pandas as pd

from experiments.schemas import SweepBin, SweepRecord, SweepStats, Table1Row

logger = logging.getLogger(__name__)

RECORD_COLUMNS = [
    'seed',
    'a',
    'pert_l2_per_particle',
    'pol_initial',
    'pol_min',
    'diverged',
    'final_speed',
]
STATS_COLUMNS = ['bin_lo', 'bin_hi', 'count', 'mean', 'q05', 'q95']
TABLE1_COLUMNS = [
    'potential',
    'params',
    'N',
    'mu4',
    'abs_mu3',
    'D',
    'kernel_dim',
    'gap',
]
FLOAT_FORMAT = '%.17g'


def _write(frame: pd.DataFrame, path: str | Path) -> Path:
    wrapped_path = Path(path)
    wrapped_path.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(wrapped_path, index=False, float_format=FLOAT_FORMAT)
    logger.info('Wrote %d rows to %s', len(frame), wrapped_path)
    return wrapped_path


def write_records_csv(path: str | Path, records: list[SweepRecord]) -> Path:
    frame = pd.DataFrame([r.model_dump() for r in records], columns=RECORD_COLUMNS)
    return _write(frame, path)


def _bins_frame(bins: list[SweepBin]) -> pd.DataFrame:
    return pd.DataFrame([b.model_dump() for b in bins], columns=STATS_COLUMNS)


def write_stats_csv(
    stats_path: str | Path, pert_stats_path: str | Path, stats: SweepStats
) -> tuple[Path, Path]:
    return (
        _write(_bins_frame(stats.pol_min), stats_path),
        _write(_bins_frame(stats.pert), pert_stats_path),
    )


def write_table1_csv(path: str | Path, rows: list[Table1Row]) -> Path:
    frame = pd.DataFrame([r.model_dump() for r in rows], columns=TABLE1_COLUMNS)
    return _write(frame, path)
