import math

import numpy as np

from experiments.config import experiments_config
from experiments.schemas import SweepBin, SweepRecord, SweepStats

QUANTILES = (0.05, 0.95)


def nearest_rank(sorted_values: np.ndarray, q: float) -> float:
    """Empirical q-quantile by the nearest-rank rule on already sorted samples."""
    rank = max(math.ceil(q * len(sorted_values)) - 1, 0)
    return float(sorted_values[rank])


def _bin_statistics(
    values: np.ndarray, index: np.ndarray, edges: np.ndarray
) -> list[SweepBin]:
    bins = []
    for k in range(len(edges) - 1):
        members = np.sort(values[index == k])
        if len(members) == 0:
            mean = q05 = q95 = math.nan
        else:
            mean = float(members.mean())
            q05, q95 = (nearest_rank(members, q) for q in QUANTILES)
        bins.append(
            SweepBin(
                bin_lo=float(edges[k]),
                bin_hi=float(edges[k + 1]),
                count=len(members),
                mean=mean,
                q05=q05,
                q95=q95,
            )
        )
    return bins


def sweep_statistics(
    records: list[SweepRecord], n_bins: int | None = None
) -> SweepStats:
    """Equal-width bins over the observed pol_initial range.

    Each bin holds the mean and 5%/95% quantiles of pol_min and of the
    per-particle perturbation size; empty bins have count 0 and NaN values.
    """
    n_bins = experiments_config.N_BINS if n_bins is None else n_bins
    if not records:
        raise ValueError('statistics need at least one record')
    if n_bins < 1:
        raise ValueError('at least one bin is needed')

    pol_initial = np.array([r.pol_initial for r in records])
    lo, hi = float(pol_initial.min()), float(pol_initial.max())
    edges = np.linspace(lo, hi, n_bins + 1)
    if hi > lo:
        index = np.floor((pol_initial - lo) / (hi - lo) * n_bins).astype(int)
        index = np.clip(index, 0, n_bins - 1)
    else:
        index = np.zeros(len(records), dtype=int)

    pol_min = np.array([r.pol_min for r in records])
    pert = np.array([r.pert_l2_per_particle for r in records])
    return SweepStats(
        pol_min=_bin_statistics(pol_min, index, edges),
        pert=_bin_statistics(pert, index, edges),
    )
