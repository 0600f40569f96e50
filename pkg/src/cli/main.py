import argparse
import logging
import sys
from dataclasses import replace

from cli.commands import (
    EXIT_MISMATCH,
    EXIT_OK,
    EXIT_RESOURCE,
    EXIT_USAGE,
    RunConfig,
    cmd_powers,
    cmd_predict,
    cmd_verify,
)
from default.box import get_default_margin
from default.field import get_default_field_config
from kernel.field import FieldConfig
from scheme.params import AciParams, BiDegree
from utils.errors import (
    BoxTooSmallError,
    FieldTooSmallError,
    InvalidParamsError,
    KernelInvariantError,
    PreconditionError,
    ResolutionLengthError,
)
from utils.logging import configure_logging
from utils.yaml import DEFAULT_CONFIG_PATH, load_config

logger = logging.getLogger(__name__)


class CliParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def add_common_arguments(parser: argparse.ArgumentParser, params_required: bool = True):
    parser.add_argument("--alpha", nargs=2, type=int, metavar=("A1", "A2"), required=params_required)
    parser.add_argument("--beta", nargs=2, type=int, metavar=("B1", "B2"), required=params_required)
    parser.add_argument("--m", nargs=3, type=int, metavar=("M11", "M12", "M21"), required=params_required)
    parser.add_argument("--format", choices=("text", "json", "csv"), default="text")
    parser.add_argument("--prime", type=int, help="field modulus (overrides config and FAT_ACI_PRIME)")
    parser.add_argument("--seed", type=int, help="seed for the choice of line scalars")
    parser.add_argument("--margin", nargs=2, type=int, metavar=("A", "B"))
    parser.add_argument("--config", default=DEFAULT_CONFIG_PATH, help="YAML configuration file")
    parser.add_argument("--log-level", help="logging level for stderr")


def build_parser() -> CliParser:
    parser = CliParser(prog="fat-aci", description="Betti tables of fat ACI schemes in P1 x P1.")
    subparsers = parser.add_subparsers(dest="command", required=True)

    predict = subparsers.add_parser("predict", help="print the predicted Betti table")
    add_common_arguments(predict)

    verify = subparsers.add_parser("verify", help="compare the prediction with the linear-algebra oracle")
    add_common_arguments(verify, params_required=False)
    verify.add_argument("--sweep", action="store_true", help="verify every instance up to the bounds")
    verify.add_argument("--max-alpha", type=int, help="largest block size in a sweep")
    verify.add_argument("--max-m", type=int, help="largest multiplicity in a sweep")
    verify.add_argument("--corrupt", action="store_true", help="perturb the prediction (negative control)")

    powers = subparsers.add_parser("powers", help="compare I^m with the symbolic power I^(m)")
    add_common_arguments(powers)
    powers.add_argument("--power", type=int, default=2, help="exponent m >= 1")
    return parser


def build_run_config(args: argparse.Namespace, config) -> RunConfig:
    params = None
    if args.alpha is not None and args.beta is not None and args.m is not None:
        params = AciParams(*args.alpha, *args.beta, *args.m)
    elif args.command != "verify" or not args.sweep:
        raise InvalidParamsError("--alpha, --beta and --m are required")

    field = get_default_field_config(config)
    if args.prime is not None or args.seed is not None:
        field = FieldConfig(
            p=args.prime if args.prime is not None else field.p,
            seed=args.seed if args.seed is not None else field.seed,
        )
    section = "powers" if args.command == "powers" else "verification"
    margin = BiDegree(*args.margin) if args.margin else get_default_margin(config, section)

    run = RunConfig(command=args.command, params=params, field=field, margin=margin, fmt=args.format)
    if args.command == "powers":
        if args.power < 1:
            raise PreconditionError(f"--power must be at least 1, got {args.power}")
        return replace(run, power=args.power)
    if args.command == "verify":
        verification = config["verification"]
        return replace(
            run,
            sweep=args.sweep,
            max_alpha=args.max_alpha or verification["sweep_max_alpha"],
            max_m=args.max_m if args.max_m is not None else verification["sweep_max_m"],
            corrupt=args.corrupt,
        )
    return run


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging("INFO")
    try:
        config = load_config(config_path=args.config)
        configure_logging(args.log_level or config["logging"]["level"])
        run = build_run_config(args, config)
    except KeyError as e:
        logger.error("Config file %s has no entry %s", args.config, e)
        return EXIT_USAGE
    except (TypeError, ValueError) as e:
        # ConfigError and the parameter errors are ValueErrors too
        logger.error("%s", e)
        return EXIT_USAGE

    try:
        if run.command == "predict":
            assert run.params is not None
            output, code = cmd_predict(run.params, run.fmt), EXIT_OK
        elif run.command == "verify":
            output, code = cmd_verify(run)
        else:
            output, code = cmd_powers(run)
    except (InvalidParamsError, PreconditionError, FieldTooSmallError) as e:
        logger.error("%s", e)
        return EXIT_USAGE
    except (BoxTooSmallError, ResolutionLengthError, KernelInvariantError) as e:
        logger.error("%s", e)
        return EXIT_RESOURCE

    print(output)
    if code == EXIT_MISMATCH:
        logger.warning("Verification failed")
    return code


if __name__ == "__main__":
    sys.exit(main())
