"""
Command line interface
Subcommands: enumerate, ehrhart, verify, plotdata, normal-form, batch
"""

import argparse
import contextlib
import logging
import os
import sys
from typing import Any, Dict, Iterator, List, Optional, Sequence, TextIO, Tuple

from polygrow import __version__
from polygrow.core.batch_runner import BatchRunner
from polygrow.core.bounds import inf_growable_tuple_check
from polygrow.core.ehrhart import ehrhart_tuple
from polygrow.core.growing_engine import GrowingEngine
from polygrow.core.normal_form import key_from_string, key_to_string, polygon_from_key
from polygrow.core.verifier import DatasetVerifier
from polygrow.io.records import (
    RecordReader,
    RunManifest,
    plot_rows,
    write_plot_rows,
    write_quasi_polynomials,
    write_records,
    write_tuples,
)
from polygrow.reporting.json_reporter import JsonReporter
from polygrow.reporting.plot_renderer import PlotRenderer
from polygrow.reporting.word_reporter import WordReporter
from polygrow.utils.config_validator import ConfigValidator
from polygrow.utils.errors import PolyGrowError
from polygrow.utils.helpers import ensure_parent_directory, format_vertices
from polygrow.utils.logger import Logger

EXIT_OK = 0
EXIT_IO = 1
EXIT_INVALID = 2
EXIT_VIOLATION = 3

DEFAULT_CONFIG = "config/master_config.json"


@contextlib.contextmanager
def _open_output(path: Optional[str]) -> Iterator[TextIO]:
    """A text stream for path; stdout for None or '-'"""
    if path is None or path == '-':
        yield sys.stdout
        return
    with open(ensure_parent_directory(path), 'w', encoding='utf-8', newline='\n') as stream:
        yield stream


def _load_config(path: Optional[str]) -> Dict[str, Any]:
    """Explicit paths must validate; the default is optional"""
    if path is None:
        if not os.path.exists(DEFAULT_CONFIG):
            return {}
        path = DEFAULT_CONFIG
    return ConfigValidator().load_config(path)


def _read(path: str) -> List[Tuple[Any, Any]]:
    return RecordReader().read_polygons(path)


def cmd_enumerate(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    engine = GrowingEngine(config, threads=args.threads)
    if args.zero_interior:
        dataset = engine.classify_zero_interior()
        parameters: Dict[str, Any] = {'r': 2, 'zero_interior': True}
    else:
        if args.r is None or args.k is None:
            raise PolyGrowError("enumerate needs -r and -k unless --zero-interior is given")
        dataset = engine.classify(args.r, args.k)
        parameters = {'r': args.r, 'k': args.k}

    with _open_output(args.out) as stream:
        write_records(stream, dataset.polygons)

    manifest = RunManifest.from_dataset('enumerate', parameters, dataset)
    logger = Logger()
    if args.out and args.out != '-':
        JsonReporter(config).write_manifest(manifest, args.out)
    logger.info(f"Manifest: total={manifest.total} strata={len(manifest.strata)} "
                f"dedup={manifest.dedup_statistics} wall_clock={manifest.wall_clock}s")
    return EXIT_OK


def cmd_ehrhart(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    keyed = _read(args.input)
    if args.quasi:
        with _open_output(args.quasi) as stream:
            write_quasi_polynomials(stream, keyed)
    if args.tuples or not args.quasi:
        with _open_output(args.tuples) as stream:
            write_tuples(stream, keyed)
    return EXIT_OK


def _render_exception_plots(renderer: PlotRenderer, report, limit: int = 12) -> List[str]:
    """One scatter per (b1, i1) that carries an exception, then the first exception polygons"""
    images = []
    for b1, i1 in sorted({(t.b1, t.i1) for _, t in report.exceptions}):
        rows = plot_rows(report.tuples, b1, i1)
        images.append(renderer.render_tuple_scatter(rows, b1, i1))
    for key, _ in report.exceptions[:limit]:
        images.append(renderer.render_polygon(polygon_from_key(key_from_string(key))))
    return images


def cmd_verify(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    keyed = _read(args.input)
    report = DatasetVerifier(zero_interior=args.zero_interior).verify(keyed)
    summary = report.to_dict()

    print(f"polygons: {report.total}")
    for verdict, count in report.verdict_counts.items():
        print(f"{verdict}: {count}")
    for key, t in report.exceptions:
        print(f"exception\t{key}\t{tuple(t)}")
    for name, found in report.violations.items():
        if found:
            print(f"violated {name}: {len(found)}")

    if args.report:
        JsonReporter(config).write_verification_report(summary, args.report)
    if args.docx:
        images: List[str] = []
        if config.get('reporting', {}).get('plot_images', True):
            images = _render_exception_plots(PlotRenderer(config), report)
        WordReporter(config).generate_report(summary, args.docx, source=args.input, images=images)

    if report.unconditional_violations:
        Logger().error(f"{report.unconditional_violations} polygons violate an unconditional bound")
        return EXIT_VIOLATION
    return EXIT_OK


def _split_path(path: str, suffix: str) -> str:
    stem, extension = os.path.splitext(path)
    return f"{stem}_{suffix}{extension}"


def _infinite_rows(b1: int, i1: int, finite: Sequence[Tuple[int, int]]) -> List[Tuple[int, int]]:
    """Tuples of infinitely growable polygons inside the plotted box"""
    if i1 != 0:
        return []
    limit = 2 * b1 + 7
    max_b2 = max([b2 for b2, _ in finite] + [limit])
    max_i2 = max([i2 for _, i2 in finite] + [limit])
    return [(b2, i2) for b2 in range(max_b2 + 1) for i2 in range(max_i2 + 1)
            if inf_growable_tuple_check(b1, b2, i2)]


def cmd_plotdata(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    if args.b1 < 0 or args.i1 < 0:
        raise PolyGrowError(f"filter values must be nonnegative, got b1={args.b1}, i1={args.i1}")
    keyed = _read(args.input)
    rows = plot_rows((ehrhart_tuple(polygon) for _, polygon in keyed), args.b1, args.i1)

    infinite: List[Tuple[int, int]] = []
    if args.split:
        if not args.out or args.out == '-':
            raise PolyGrowError("--split needs a file path in --out")
        infinite = _infinite_rows(args.b1, args.i1, rows)
        with _open_output(_split_path(args.out, 'fin')) as stream:
            write_plot_rows(stream, rows)
        with _open_output(_split_path(args.out, 'inf')) as stream:
            write_plot_rows(stream, infinite)
    else:
        with _open_output(args.out) as stream:
            write_plot_rows(stream, rows)

    if args.image:
        PlotRenderer(config).render_tuple_scatter(rows, args.b1, args.i1, args.image, infinite=infinite)
    return EXIT_OK


def cmd_normal_form(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    keyed = _read(args.input)
    with _open_output(args.out) as stream:
        for key, polygon in keyed:
            stream.write(f"{key_to_string(key)}\t{polygon.denominator}\t{format_vertices(polygon.vertices)}\n")
    return EXIT_OK


def cmd_batch(args: argparse.Namespace, config: Dict[str, Any]) -> int:
    runner = BatchRunner(args.config or DEFAULT_CONFIG, threads=args.threads)
    batch = runner.execute_all_runs(
        progress_callback=lambda i, n, name: Logger().info(f"[{i + 1}/{n}] {name}")
    )
    for run in batch['runs']:
        print(f"{run['name']}\t{run['status']}\t{run.get('total')}\t{run.get('expected_total')}")
    return EXIT_OK if batch['status'] == 'passed' else EXIT_VIOLATION


COMMANDS = {
    'enumerate': cmd_enumerate,
    'ehrhart': cmd_ehrhart,
    'verify': cmd_verify,
    'plotdata': cmd_plotdata,
    'normal-form': cmd_normal_form,
    'batch': cmd_batch,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='polygrow',
        description='Classify rational polygons of fixed denominator and size by growing',
    )
    parser.add_argument('--version', action='version', version=f"%(prog)s {__version__}")
    parser.add_argument('--threads', type=int, default=None, help='worker processes (default: all cores)')
    parser.add_argument('--config', default=None, help=f'master config (default: {DEFAULT_CONFIG} if present)')
    parser.add_argument('--log-dir', default='logs', help="log file directory; '' disables the log file")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument('-v', '--verbose', action='store_true')
    verbosity.add_argument('-q', '--quiet', action='store_true')

    sub = parser.add_subparsers(dest='command', required=True)

    enumerate_parser = sub.add_parser('enumerate', help='classify polygons of denominator r and size k')
    enumerate_parser.add_argument('-r', type=int, help='denominator')
    enumerate_parser.add_argument('-k', type=int, help='number of lattice points')
    enumerate_parser.add_argument('--zero-interior', action='store_true',
                                  help='denominator-2 polygons without interior lattice points')
    enumerate_parser.add_argument('--out', default=None, help='JSON Lines output (default: stdout)')

    ehrhart_parser = sub.add_parser('ehrhart', help='Ehrhart tuples and quasi-polynomials')
    ehrhart_parser.add_argument('--in', dest='input', required=True)
    ehrhart_parser.add_argument('--tuples', default=None, help='CSV key,b1,i1,b2,i2')
    ehrhart_parser.add_argument('--quasi', default=None, help='CSV key,i,a2,a1,a0')

    verify_parser = sub.add_parser('verify', help='check the tuple conditions and bounds')
    verify_parser.add_argument('--in', dest='input', required=True)
    verify_parser.add_argument('--report', default=None, help='JSON report path')
    verify_parser.add_argument('--docx', default=None, help='Word report path')
    verify_parser.add_argument('--zero-interior', action='store_true', help='also require i(P) = 0')

    plot_parser = sub.add_parser('plotdata', help='(b2, i2) rows for fixed b(P), i(P)')
    plot_parser.add_argument('--in', dest='input', required=True)
    plot_parser.add_argument('--b1', type=int, required=True)
    plot_parser.add_argument('--i1', type=int, required=True)
    plot_parser.add_argument('--out', default=None)
    plot_parser.add_argument('--split', action='store_true', help='write _fin and _inf files')
    plot_parser.add_argument('--image', default=None, help='PNG scatter path')

    normal_parser = sub.add_parser('normal-form', help='print canonical keys of records')
    normal_parser.add_argument('--in', dest='input', required=True)
    normal_parser.add_argument('--out', default=None)

    sub.add_parser('batch', help='run the classification_runs of the master config')
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INVALID if e.code else EXIT_OK

    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
    logger = Logger.configure(log_dir=args.log_dir or None, console_level=level)
    if args.log_dir:
        logger.debug(f"Log file: {logger.get_log_file_path()}")

    try:
        if args.threads is not None and args.threads < 0:
            raise PolyGrowError(f"--threads must be nonnegative, got {args.threads}")
        config = _load_config(args.config) if args.command != 'batch' else {}
        return COMMANDS[args.command](args, config)
    except PolyGrowError as e:
        logger.error(str(e))
        return EXIT_INVALID
    except OSError as e:
        logger.error(f"I/O failure: {str(e)}")
        return EXIT_IO


if __name__ == '__main__':
    sys.exit(main())
