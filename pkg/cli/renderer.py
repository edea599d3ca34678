from pathlib import Path

import yaml
from jinja2 import Environment, StrictUndefined
from pydantic import TypeAdapter

from cli.filters import ALL_FILTERS
from cli.schemas import ConsoleTemplate

TEMPLATES_PATH = Path(__file__).parent / 'templates' / 'console.yml'

with TEMPLATES_PATH.open(encoding='utf-8') as f:
    TEMPLATES: dict[str, ConsoleTemplate] = TypeAdapter(
        dict[str, ConsoleTemplate]
    ).validate_python(yaml.safe_load(f))


class ConsoleRenderer:
    def __init__(self):
        self.env = Environment(
            trim_blocks=True, lstrip_blocks=True, undefined=StrictUndefined
        )
        self.env.filters.update({f.__name__: f for f in ALL_FILTERS})

    def render(self, key: str, **kwargs) -> str:
        template = TEMPLATES.get(key)
        if not template:
            raise ValueError(f'Console template not found for key: {key}')
        return self.env.from_string(template.template).render(**kwargs).rstrip()


renderer = ConsoleRenderer()
