import logging
import sys

from pydantic import ValidationError

from cli.commands import COMMANDS
from cli.config import RunConfig, apply_overrides, cli_config, load_run_config
from cli.parser import build_parser
from common.exceptions import (
    ConfigFileError,
    ConvergenceError,
    CorruptInputError,
    DivergenceError,
    ToleranceMismatchError,
)
from common.schemas import ExitCode

logger = logging.getLogger(__name__)


def main(argv: list[str] | None = None) -> ExitCode:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=cli_config.LOG_LEVEL,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stdout,
    )

    try:
        config = load_run_config(args.config) if args.config else RunConfig()
        config = apply_overrides(
            config,
            potential=args.potential,
            N=args.N,
            threads=args.threads,
            m0_angle=args.m0_angle,
            seed=args.seed,
            dump_matrices=args.dump_matrices,
            trajectory_every=args.trajectory_every,
        )
    except (ConfigFileError, ValidationError) as e:
        logger.error('Invalid configuration: %s', e)
        return ExitCode.CONFIG_ERROR

    logger.info('Running %s into %s', args.command, args.out)
    try:
        return COMMANDS[args.command](config, args.out, getattr(args, 'steady', None))
    except (ConvergenceError, DivergenceError, ToleranceMismatchError) as e:
        logger.error('Numerical failure: %s', e)
        return ExitCode.NON_CONVERGENCE
    except (CorruptInputError, FileNotFoundError) as e:
        logger.error('Unusable input: %s', e)
        return ExitCode.INPUT_ERROR


if __name__ == '__main__':
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        print('Working was interrupted.')
