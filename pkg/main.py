import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from complexes.invariants import betti1
from complexes.links import vertex_link
from data.document import ComplexLoader, check_schema, save_complex
from data.export import (
    decomposition_to_dict,
    link_to_dot,
    normal_form_to_dict,
    trace_frame,
    whitehead_to_dot,
)
from decomposition.engine import DecompositionEngine
from freewords.oracle import WhiteheadOracle
from freewords.separability import SeparabilityChecker
from freewords.whitehead import vertex_label, whitehead_graph
from freewords.words import parse_words
from reports.benchmark import PolynomialityBenchmark
from utils.errors import (
    DocumentError,
    GraphError,
    OracleInconclusiveError,
    TubularError,
    ValidationError,
    WordError,
)

logger = logging.getLogger('splitting')

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_INCONCLUSIVE = 4


def banner(title):
    print("\n" + "=" * 60)
    print(title.upper())
    print("=" * 60)


class SplittingToolkit:
    def __init__(self, max_sl_moves=None, max_cuts=10_000, max_rounds=256, max_total_length=64):
        self.loader = ComplexLoader()
        self.engine = DecompositionEngine(max_sl_moves=max_sl_moves, max_cuts=max_cuts)
        self.checker = SeparabilityChecker(self.engine)
        self.oracle = WhiteheadOracle(max_rounds=max_rounds, max_total_length=max_total_length)

    def validate(self, path, as_json=False):
        """Report every violated invariant of a complex file"""
        report = self.loader.load(path).validate()
        if as_json:
            print(json.dumps(report.to_dict(), sort_keys=True, indent=2))
        else:
            banner(f"validation of {Path(path).name}")
            if report.is_valid:
                print("valid tubular graph of graphs")
            for violation in report.violations:
                print(f"  {violation}")
        return EXIT_OK if report.is_valid else EXIT_INVALID

    def analyze(self, path, trace=False, as_json=False):
        """Normalize a complex and report its normal form"""
        c = self.loader.load(path)
        form = self.engine.normalize(c)
        if trace:
            for event in form.trace:
                print(event.to_json(), file=sys.stderr)
        record = normal_form_to_dict(form)
        if as_json:
            check_schema(record, 'analysis')
            print(json.dumps(record, sort_keys=True, indent=2))
            return EXIT_OK

        banner(f"normal form of {Path(path).name}")
        print(f"Outcome: {form.outcome.value}")
        print(f"SL-moves: {form.move_count}")
        print(f"Squares: {form.complex.n_squares}")
        print(f"Euler characteristic: {record['euler_characteristic']}")
        print(f"First Betti number: {record['betti1']}")
        if form.witness is not None:
            print(f"Witness: {form.witness}")
        if form.trace:
            print("-" * 40)
            print(trace_frame(form.trace).to_string(index=False))
        return EXIT_OK

    def decompose(self, path, as_json=False, out_dir=None):
        """Grushko decomposition; pieces are written next to the input"""
        path = Path(path)
        c = self.loader.load(path)
        decomposition = self.engine.grushko(c)
        target = Path(out_dir) if out_dir else path.parent
        target.mkdir(parents=True, exist_ok=True)
        files = []
        for k, piece in enumerate(decomposition.pieces):
            piece_path = target / f"{path.stem}.piece{k}.tgg"
            save_complex(piece, piece_path)
            files.append(piece_path)

        record = decomposition_to_dict(decomposition, betti1(c), files)
        if as_json:
            check_schema(record, 'decomposition')
            print(json.dumps(record, sort_keys=True, indent=2))
            return EXIT_OK

        banner(f"grushko decomposition of {Path(path).name}")
        print(f"Pieces: {len(decomposition.pieces)}")
        for piece_record in record['pieces']:
            print(f"  {piece_record['file']}: {piece_record['squares']} squares, betti1 {piece_record['betti1']}")
        print(f"Free rank: {decomposition.free_rank}")
        identity = record['betti1']
        print(
            f"betti1: {identity['input']} = {identity['pieces']} + {identity['free_rank']}"
            f" ({'ok' if identity['balanced'] else 'MISMATCH'})"
        )
        return EXIT_OK

    def separable(self, rank, text, run_oracle=False, as_json=False):
        """Decide separability of a word set through its double"""
        words = parse_words(rank, text)
        result = self.checker.check(rank, words)
        record = result.to_dict()
        verdict = 'separable' if result.separable else 'not separable'
        if run_oracle:
            try:
                oracle = self.oracle.is_separable(rank, words)
                record['oracle'] = 'separable' if oracle else 'not separable'
                record['agrees'] = oracle == result.separable
            except OracleInconclusiveError as exc:
                logger.warning("oracle inconclusive: %s", exc)
                record['oracle'] = 'inconclusive'
                record['agrees'] = None

        if as_json:
            check_schema(record, 'separability')
            print(json.dumps(record, sort_keys=True, indent=2))
        else:
            banner(f"separability of {' '.join(record['words'])}")
            print(verdict)
            certificate = record['certificate']
            print(f"Outcome of the double: {certificate['outcome']} after {certificate['sl_moves']} SL-moves")
            if 'witness' in certificate:
                print(f"Witness: {certificate['witness']}")
            if 'free_rank' in certificate:
                print(f"Splitting: {len(certificate['pieces'])} pieces, free rank {certificate['free_rank']}")
            if run_oracle:
                print(f"Whitehead oracle: {record['oracle']}")
        if run_oracle and record['oracle'] == 'inconclusive':
            return EXIT_INCONCLUSIVE
        return EXIT_OK

    def link(self, path, graph, vertex, dot=False):
        """Print the link of one vertex"""
        c = self.loader.load(path)
        try:
            s = c.index_of(graph)
        except KeyError:
            if not graph.isdigit():
                raise GraphError(f"no vertex graph named {graph!r}")
            s = int(graph)
        link = vertex_link(c, s, vertex)
        if dot:
            print(link_to_dot(link), end='')
            return EXIT_OK
        banner(f"link of vertex {vertex} in {c.vertex_graphs[s].name}")
        print(f"Vertical vertices: {link.n_vertical}, horizontal vertices: {len(link.horizontal)}")
        print(f"Edges: {link.graph.n_edges}, components: {len(link.components())}")
        for (u, v), corner in zip(link.graph.edges, link.corners):
            print(f"  {link.describe(u)} -- {link.describe(v)}  square {corner}")
        return EXIT_OK

    def whitehead(self, rank, text, dot=False):
        """Print the Whitehead graph of a word set"""
        graph = whitehead_graph(rank, parse_words(rank, text))
        if dot:
            print(whitehead_to_dot(graph), end='')
            return EXIT_OK
        banner(f"whitehead graph of {text}")
        for u, v in graph.edges:
            print(f"  {vertex_label(u)} -- {vertex_label(v)}")
        cut = [vertex_label(v) for v in graph.cut_vertices()]
        print(f"Connected: {graph.is_connected()}; cut vertices: {', '.join(cut) or 'none'}")
        return EXIT_OK

    def benchmark(self, sizes, rank=2, repeats=3, seed=0, output=None):
        """Empirical running time of normalize on random doubles"""
        bench = PolynomialityBenchmark(sizes=sizes, rank=rank, repeats=repeats, seed=seed)
        results = bench.run()
        fit = bench.plot(output, results) if output else bench.fit_exponent(results)
        banner("normalization running time")
        print(results.groupby('squares')['seconds'].agg(['mean', 'max']).to_string())
        print(f"Fitted exponent: {fit['exponent']:.3f} (95% CI {fit['ci_low']:.3f} .. {fit['ci_high']:.3f})")
        print(f"Sub-cubic: {fit['sub_cubic']}")
        if output:
            print(f"Figure saved to {output}")
        return EXIT_OK


def _build_parser():
    parser = argparse.ArgumentParser(
        prog='splitting',
        description="Vertex links, Grushko decompositions and separability of free-group words",
    )
    parser.add_argument('-v', '--verbose', action='store_true', help="Log debug messages to standard error.")
    parser.add_argument('--max-sl-moves', type=int, default=None, help="Cap on openings per normalization.")
    parser.add_argument('--max-cuts', type=int, default=10_000, help="Cap on cuts per decomposition.")
    subparsers = parser.add_subparsers(dest='command', required=True)

    validate = subparsers.add_parser('validate', help="Check a .tgg complex.")
    validate.add_argument('file')
    validate.add_argument('--json', action='store_true')

    analyze = subparsers.add_parser('analyze', help="Normal form of a complex.")
    analyze.add_argument('file')
    analyze.add_argument('--trace', action='store_true', help="Stream trace events to standard error.")
    analyze.add_argument('--json', action='store_true')

    decompose = subparsers.add_parser('decompose', help="Grushko decomposition of a complex.")
    decompose.add_argument('file')
    decompose.add_argument('--json', action='store_true')
    decompose.add_argument('--out-dir', default=None, help="Directory for piece files.")

    separable = subparsers.add_parser('separable', help="Is a word set separable?")
    separable.add_argument('-n', '--rank', type=int, required=True)
    separable.add_argument('-w', '--words', required=True, help='Words such as "abAB aab".')
    separable.add_argument('--oracle', action='store_true', help="Cross-check with Whitehead minimization.")
    separable.add_argument('--json', action='store_true')
    separable.add_argument('--max-rounds', type=int, default=256)
    separable.add_argument('--max-total-length', type=int, default=64)

    link = subparsers.add_parser('link', help="Link of a vertex.")
    link.add_argument('file')
    link.add_argument('--graph', required=True, help="Vertex graph name or index.")
    link.add_argument('--vertex', type=int, required=True)
    link.add_argument('--dot', action='store_true')

    whitehead = subparsers.add_parser('whitehead', help="Whitehead graph of a word set.")
    whitehead.add_argument('-n', '--rank', type=int, required=True)
    whitehead.add_argument('-w', '--words', required=True)
    whitehead.add_argument('--dot', action='store_true')

    benchmark = subparsers.add_parser('benchmark', help="Running time of normalize on random doubles.")
    benchmark.add_argument('--sizes', type=int, nargs='+', default=[30, 90, 270, 810])
    benchmark.add_argument('--rank', type=int, default=2)
    benchmark.add_argument('--repeats', type=int, default=3)
    benchmark.add_argument('--seed', type=int, default=0)
    benchmark.add_argument('--output', default=None, help="PNG file for the log-log plot.")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format='%(levelname)s %(name)s: %(message)s',
    )
    toolkit = SplittingToolkit(
        max_sl_moves=args.max_sl_moves,
        max_cuts=args.max_cuts,
        max_rounds=getattr(args, 'max_rounds', 256),
        max_total_length=getattr(args, 'max_total_length', 64),
    )

    try:
        if args.command == 'validate':
            return toolkit.validate(args.file, as_json=args.json)
        if args.command == 'analyze':
            return toolkit.analyze(args.file, trace=args.trace, as_json=args.json)
        if args.command == 'decompose':
            return toolkit.decompose(args.file, as_json=args.json, out_dir=args.out_dir)
        if args.command == 'separable':
            return toolkit.separable(args.rank, args.words, run_oracle=args.oracle, as_json=args.json)
        if args.command == 'link':
            return toolkit.link(args.file, args.graph, args.vertex, dot=args.dot)
        if args.command == 'whitehead':
            return toolkit.whitehead(args.rank, args.words, dot=args.dot)
        if args.command == 'benchmark':
            return toolkit.benchmark(args.sizes, args.rank, args.repeats, args.seed, args.output)
    except (DocumentError, WordError, GraphError) as exc:
        print(f"❌ {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValidationError as exc:
        print(f"❌ {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OracleInconclusiveError as exc:
        print(f"❌ {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    except TubularError as exc:
        print(f"❌ {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    return EXIT_INVALID


if __name__ == "__main__":
    raise SystemExit(main())
