import hashlib
import logging
from pathlib import Path

from pydantic import ValidationError

from cli.schemas import SteadyStateFile, SteadyStatePayload
from common.exceptions import CorruptInputError
from jacobians.schemas import StationaryConfig

logger = logging.getLogger(__name__)

STEADY_FILE_NAME = 'steady.json'


def payload_checksum(payload: SteadyStatePayload) -> str:
    return hashlib.sha256(payload.model_dump_json().encode('utf-8')).hexdigest()


def write_steady_file(
    out_dir: str | Path, config: StationaryConfig, seed: int
) -> Path:
    payload = SteadyStatePayload(config=config, seed=seed)
    document = SteadyStateFile(payload=payload, sha256=payload_checksum(payload))
    path = Path(out_dir) / STEADY_FILE_NAME
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(document.model_dump_json(indent=2), encoding='utf-8')
    logger.info('Wrote stationary state (N = %d) to %s', config.N, path)
    return path


def read_steady_file(path: str | Path) -> SteadyStatePayload:
    """Parse a steady-state file and verify its checksum.

    A missing file raises FileNotFoundError; anything unreadable or tampered
    with raises CorruptInputError.
    """
    text = Path(path).read_text(encoding='utf-8')
    try:
        document = SteadyStateFile.model_validate_json(text)
    except ValidationError as e:
        raise CorruptInputError(
            f'{path}: not a steady-state file ({e.error_count()} errors)'
        ) from e
    if payload_checksum(document.payload) != document.sha256:
        raise CorruptInputError(f'{path}: checksum mismatch')
    return document.payload
