import logging
from collections.abc import Iterable
from pathlib import Path

import numpy as np
import pandas as pd

from common.schemas import Vector
from dynamics.schemas import ParticleState

logger = logging.getLogger(__name__)

TRAJECTORY_COLUMNS = ('t', 'particle', 'x', 'y', 'vx', 'vy')


class TrajectoryRecorder:
    def __init__(self, every: int = 1):
        if every < 1:
            raise ValueError('sampling interval must be at least one step')
        self.every = every
        self.snapshots: list[tuple[float, ParticleState]] = []

    def __call__(self, step: int, t: float, y: Vector) -> None:
        if step % self.every == 0:
            self.snapshots.append((t, ParticleState.unpack(y)))


def trajectory_frame(snapshots: Iterable[tuple[float, ParticleState]]) -> pd.DataFrame:
    frames = []
    for t, state in snapshots:
        positions = state.x.reshape(-1, 2)
        velocities = state.v.reshape(-1, 2)
        frames.append(
            pd.DataFrame(
                {
                    't': np.full(state.N, t),
                    'particle': np.arange(state.N),
                    'x': positions[:, 0],
                    'y': positions[:, 1],
                    'vx': velocities[:, 0],
                    'vy': velocities[:, 1],
                }
            )
        )
    if not frames:
        return pd.DataFrame(columns=list(TRAJECTORY_COLUMNS))
    return pd.concat(frames, ignore_index=True)


def write_trajectory_csv(
    path: str | Path, snapshots: Iterable[tuple[float, ParticleState]]
) -> Path:
    wrapped_path = Path(path)
    wrapped_path.parent.mkdir(parents=True, exist_ok=True)
    frame = trajectory_frame(snapshots)
    frame.to_csv(wrapped_path, index=False, float_format='%.17g')
    logger.info('Wrote %d trajectory rows to %s', len(frame), wrapped_path)
    return wrapped_path
