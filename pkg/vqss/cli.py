"""
The command line module.

Runs experiments, checks the exact steady state and renders heatmaps.

Attributes:
    EXIT_OK: Success.
    EXIT_VERIFY_FAILED: The oracle check did not pass.
    EXIT_INVALID_CONFIG: The config or input document is invalid.
    EXIT_SOLVER_ABORT: The solver raised.
    EXIT_IO: A file could not be read or written.
    EXIT_DEGENERATE: The steady state is not unique.
    ORACLE_RESIDUAL_TOL: Largest residual verify-oracle accepts.

"""
import argparse
import logging
import os
import sys

from . import Vqss
from .data_operation import data_manager
from .errors import vqss_errors
from .linalg.states import PSD_TOL, TRACE_TOL


EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INVALID_CONFIG = 2
EXIT_SOLVER_ABORT = 3
EXIT_IO = 4
EXIT_DEGENERATE = 5

ORACLE_RESIDUAL_TOL = 1e-9

vqss_log = logging.getLogger(__name__)
vqss_log.addHandler(logging.NullHandler())


def build_parser():
    """Return the argument parser of the vqss command."""
    parser = argparse.ArgumentParser(
        prog="vqss", description="Variational stationary states of Lindblad models.")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="log debug messages")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="log warnings and errors only")
    commands = parser.add_subparsers(dest="command", required=True)

    run_parser = commands.add_parser("run", help="run an experiment and save its outputs")
    run_parser.add_argument("config", help="experiment config file")
    run_parser.add_argument("--seed", type=int, default=None, help="replace the config seed")
    run_parser.add_argument("--output-dir", default=None, help="replace the config output_dir")

    verify_parser = commands.add_parser("verify-oracle", help="check the exact steady state")
    verify_parser.add_argument("config", help="experiment config file")

    heatmap_parser = commands.add_parser("heatmap", help="render a density matrix file as SVG")
    heatmap_parser.add_argument("rho", help="density matrix JSON file")
    heatmap_parser.add_argument("--part", choices=("re", "im"), default="re", help="matrix part")
    heatmap_parser.add_argument("--out", required=True, help="SVG output path")
    return parser


def run_experiment(config_path, seed=None, output_dir=None):
    """
    Run an experiment.

    Args:
        config_path: experiment config file.
        seed: replaces the config seed. (default: {None})
        output_dir: replaces the config output_dir, relative to the
            working directory. (default: {None})

    Returns:
        Exit status.

    """
    if output_dir is not None:
        output_dir = os.path.abspath(output_dir)
    try:
        experiment = Vqss(config_path, abs_config_path=os.getcwd(), seed=seed, output_dir=output_dir)
        result = experiment.run()
    except vqss_errors.InvalidConfigException as e:
        print("invalid config: {}".format(e), file=sys.stderr)
        return EXIT_INVALID_CONFIG
    except vqss_errors.DegenerateSteadyStateException as e:
        print("degenerate steady state: {}".format(e), file=sys.stderr)
        return EXIT_DEGENERATE
    except (OSError, vqss_errors.OutputWriteException) as e:
        print("I/O failure: {}".format(e), file=sys.stderr)
        return EXIT_IO
    except vqss_errors.VqssException as e:
        print("solver aborted: {}".format(e), file=sys.stderr)
        return EXIT_SOLVER_ABORT

    print("final loss {!r}".format(float(result.best_loss)))
    print("final fidelity {!r}".format(float(result.final_fidelity)))
    print("iterations {}".format(result.total_iterations))
    print("output {}".format(experiment.data_manager.get_output_dir()))
    return EXIT_OK


def verify_oracle(config_path):
    """
    Check the exact steady state of a config.

    Prints the residual, trace and smallest eigenvalue. Passes when the
    residual is at most ORACLE_RESIDUAL_TOL and the density matrix
    invariants hold.

    Args:
        config_path: experiment config file.

    Returns:
        Exit status.

    """
    try:
        experiment = Vqss(config_path, abs_config_path=os.getcwd())
        report = experiment.verify_oracle()
    except vqss_errors.InvalidConfigException as e:
        print("invalid config: {}".format(e), file=sys.stderr)
        return EXIT_INVALID_CONFIG
    except OSError as e:
        print("I/O failure: {}".format(e), file=sys.stderr)
        return EXIT_IO
    except vqss_errors.DegenerateSteadyStateException as e:
        print("degenerate steady state: smallest singular values {!r} and {!r}".format(
            *e.singular_values))
        return EXIT_DEGENERATE
    except vqss_errors.SteadyStateNotConvergedException as e:
        print("residual {!r}".format(float(e.residual)))
        return EXIT_VERIFY_FAILED
    except vqss_errors.VqssException as e:
        print("solver aborted: {}".format(e), file=sys.stderr)
        return EXIT_SOLVER_ABORT

    numbers = report.as_dict()
    print("residual {!r}".format(numbers['residual']))
    print("trace {!r}".format(numbers['trace']))
    print("min eigenvalue {!r}".format(numbers['min_eigenvalue']))
    print("rank {} (needs at least {} ancillas)".format(numbers['rank'], numbers['min_ancillas']))
    passed = (
        numbers['residual'] <= ORACLE_RESIDUAL_TOL
        and abs(numbers['trace'] - 1.0) <= TRACE_TOL
        and numbers['min_eigenvalue'] >= -PSD_TOL
    )
    return EXIT_OK if passed else EXIT_VERIFY_FAILED


def render_heatmap(rho_path, part, out_path):
    """
    Render a density matrix file as an SVG heatmap.

    Args:
        rho_path: density matrix JSON file.
        part: "re" or "im".
        out_path: SVG output path.

    Returns:
        Exit status.

    """
    try:
        rho = data_manager.load_density_matrix(rho_path)
        data_manager.emit_heatmap(rho, part, out_path)
    except (OSError, vqss_errors.OutputWriteException) as e:
        print("I/O failure: {}".format(e), file=sys.stderr)
        return EXIT_IO
    except vqss_errors.VqssException as e:
        print("invalid density matrix: {}".format(e), file=sys.stderr)
        return EXIT_INVALID_CONFIG
    print("wrote {}".format(out_path))
    return EXIT_OK


def main(argv=None):
    """
    Entry point of the vqss command.

    Args:
        argv: argument list without the program name; None reads
            sys.argv. (default: {None})

    Returns:
        Exit status.

    """
    args = build_parser().parse_args(argv)
    level = logging.INFO
    if args.verbose:
        level = logging.DEBUG
    elif args.quiet:
        level = logging.WARNING
    logging.basicConfig(level=level, format="%(asctime)s %(levelname)s %(name)s: %(message)s")

    if args.command == "run":
        return run_experiment(args.config, seed=args.seed, output_dir=args.output_dir)
    if args.command == "verify-oracle":
        return verify_oracle(args.config)
    return render_heatmap(args.rho, args.part, args.out)
