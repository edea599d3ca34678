import argparse
from pathlib import Path

from cli.commands import COMMANDS
from cli.config import cli_config
from potentials.schemas import PotentialFamily

STEADY_REQUIRED = ('spectrum', 'check-hypotheses')
STEADY_OPTIONAL = ('perturb-sweep',)

HELP = {
    'find-steady': 'relax random data to a stationary state and store it',
    'spectrum': 'spectra of G and of the reduced flock Jacobian',
    'check-hypotheses': 'run the stability hypotheses on a stored state',
    'perturb-sweep': 'Monte Carlo perturbations of the travelling flock',
    'reproduce-table1': 'normalised eigenvalue table over potentials and N',
}


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', type=Path, help='YAML run configuration')
    common.add_argument(
        '--out',
        type=Path,
        default=Path(cli_config.OUT_DIR),
        help='output directory (CLI > env:FLOCK_OUT_DIR > default)',
    )
    common.add_argument('--seed', type=int, help='base seed')
    common.add_argument('--threads', type=int, help='sweep worker processes')
    common.add_argument(
        '--potential',
        choices=[str(family) for family in PotentialFamily],
        help='use the reference parameters of this family',
    )
    common.add_argument('--N', type=int, help='number of particles')
    common.add_argument('--m0-angle', type=float, help='direction of m0 in radians')
    common.add_argument(
        '--dump-matrices',
        action='store_true',
        default=None,
        help='spectrum: also write G and F_B^B as text matrices',
    )
    common.add_argument(
        '--trajectory-every',
        type=int,
        help='perturb-sweep: write every k-th state of the first run as CSV',
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='flock', description='Stability toolkit for stationary flocks'
    )
    subparsers = parser.add_subparsers(dest='command', required=True)
    common = _common_flags()
    for name in COMMANDS:
        subparser = subparsers.add_parser(name, parents=[common], help=HELP[name])
        if name in STEADY_REQUIRED or name in STEADY_OPTIONAL:
            subparser.add_argument(
                '--steady',
                type=Path,
                required=name in STEADY_REQUIRED,
                help='steady-state file written by find-steady',
            )
    return parser
