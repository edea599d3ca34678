import json

import numpy as np
import pytest

from cli.schemas import SteadyStatePayload
from cli.steady_file import payload_checksum, write_steady_file
from jacobians.schemas import StationaryConfig


@pytest.fixture
def pair_steady_file(tmp_path, morse_pair):
    return write_steady_file(tmp_path / 'steady', morse_pair, seed=3)


@pytest.fixture
def write_config(tmp_path):
    def write(text, name='run.yml'):
        path = tmp_path / name
        path.write_text(text, encoding='utf-8')
        return path

    return write


@pytest.fixture
def coincident_steady_file(tmp_path, morse_spec):
    config = StationaryConfig.model_construct(
        x=np.zeros(4), spec=morse_spec, residual=0.0, tolerance=None
    )
    payload = SteadyStatePayload.model_construct(config=config, seed=3)
    document = {
        'payload': json.loads(payload.model_dump_json()),
        'sha256': payload_checksum(payload),
    }
    path = tmp_path / 'coincident' / 'steady.json'
    path.parent.mkdir()
    path.write_text(json.dumps(document), encoding='utf-8')
    return path
