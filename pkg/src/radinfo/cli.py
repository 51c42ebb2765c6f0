"""Command line entry point.

Verbs: fig1 | fig2 | fig3 | fig4 | sweep.  Values come from built-in
defaults, overridden by --config (key = value file), overridden by
flags.  Exit codes: 0 success, 2 configuration error, 3 numerical error.
"""

import argparse
import sys

from .errors import ConfigurationError, NumericalError
from .experiment import RUNNERS, load_config, spec_from_options


def _progress(done: int, total: int):
    sys.stderr.write(f"\rpoint {done}/{total}")
    if done == total:
        sys.stderr.write("\n")
    sys.stderr.flush()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="radinfo",
        description="Range-Doppler information experiments for multipulse radar")
    sub = parser.add_subparsers(dest="kind", required=True)
    for kind in RUNNERS:
        p = sub.add_parser(kind, help=f"run the {kind} experiment")
        p.add_argument("--config", default=None, help="key = value config file")
        p.add_argument("--out", dest="out_dir", default=None, help="output directory")
        p.add_argument("--seed", dest="master_seed", type=int, default=None)
        p.add_argument("--trials", type=int, default=None)
        p.add_argument("--paper-scale", dest="paper_scale", action="store_const",
                       const="true", default=None,
                       help="full-size run (N=256 and the extended pulse-count list)")
        p.add_argument("--threads", type=int, default=None)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    options = {}
    try:
        if args.config:
            options.update(load_config(args.config))
        for key in ("out_dir", "master_seed", "trials", "paper_scale", "threads"):
            value = getattr(args, key)
            if value is not None:
                options[key] = value
        spec = spec_from_options(args.kind, options)
        runner = RUNNERS[args.kind]
        if args.kind in ("fig2", "fig3", "sweep"):
            path = runner(spec, progress=_progress)
        else:
            path = runner(spec)
    except ConfigurationError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    except NumericalError as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return 3
    print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
