"""Command line: plotkit <figN> --in DIR --out FILE."""

import argparse
import sys

from .errors import SchemaError
from .figures import KINDS, FigureJob, render


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plotkit",
        description="render experiment CSV artifacts as figures")
    sub = parser.add_subparsers(dest="kind", required=True)
    for kind in KINDS:
        p = sub.add_parser(kind, help=f"render {kind}")
        p.add_argument("--in", dest="in_dir", default=".",
                       help="directory holding the experiment CSVs")
        p.add_argument("--out", dest="out_path", default=f"{kind}.png",
                       help="output image path (.png or .svg)")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        path = render(FigureJob(args.kind, args.in_dir, args.out_path))
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
