"""Main entry point for the intuitionistic Kripke model workbench"""

import sys
import argparse
import json
import logging
import time
from datetime import datetime
from pathlib import Path
from typing import List, Optional

# Add src to path
sys.path.insert(0, str(Path(__file__).parent / 'src'))

from src.config import config
from src.errors import UsageError, WorkbenchError
from src.asimulation.engine import greatest_asimulation, position_bound
from src.kripke.injectivize import injectivize
from src.kripke.loader import dump_model, load_model
from src.kripke.model import KripkeModel
from src.kripke.validation import classify_model, validate_model
from src.processors.logic_comparer import LogicComparer, compare_sentences, read_sentences
from src.reporting.report_generator import ReportGenerator
from src.semantics.evaluator import Evaluator, elements_by_name
from src.semantics.logics import Logic
from src.suites import SUITES, get_suite
from src.syntax.parser import parse_formula
from src.transforms.congruence import Congruence, coarsest_congruence, quotient
from src.transforms.star import star_expand
from src.transforms.unravel import UnravelMode, unravel


def _names(text: Optional[str]) -> List[str]:
    """'a,b' -> ['a', 'b']; empty or None -> []"""
    if not text:
        return []
    return [part.strip() for part in text.split(',') if part.strip()]


class Workbench:
    """Command handlers; each returns a process exit code"""

    def __init__(self, logic: Logic = Logic.IL, rank: Optional[int] = None,
                 seed: Optional[int] = None, as_json: bool = False):
        self.logic = logic
        self.rank = config.rank_bound if rank is None else rank
        self.seed = config.seed if seed is None else seed
        self.as_json = as_json
        self.report_generator = ReportGenerator()

    def load(self, name: str) -> KripkeModel:
        """Load a model file or a fixture (FIX-CHAIN, FIX-CD, FIX-EQ)"""
        m = load_model(config.fixture_path(name))
        if self.logic.with_equality and not m.signature.with_equality:
            m = m.with_equality(True)
        return m

    def emit(self, data) -> None:
        print(json.dumps(data, indent=2))

    def write_model(self, m: KripkeModel, output: Optional[str]) -> int:
        text = dump_model(m, output)
        if output is None:
            print(text)
        else:
            print(f"✓ Wrote {len(m.worlds)} worlds to {output}", file=sys.stderr)
        return 0

    # Commands
    # -------------------------------------------------------------------------

    def validate(self, model: str) -> int:
        m = load_model(config.fixture_path(model))
        diagnostics = validate_model(m)
        if self.as_json:
            self.emit({'model': model, 'valid': not diagnostics,
                       'diagnostics': [{'law': d.law, 'message': d.message,
                                        'witnesses': list(d.witnesses)} for d in diagnostics],
                       'classes': classify_model(m).as_dict() if not diagnostics else None})
            return 1 if diagnostics else 0

        if diagnostics:
            for d in diagnostics:
                print(f"✗ {d}")
            return 1
        flags = classify_model(m)
        print(f"✓ {model}: valid model, {len(m.worlds)} worlds")
        print(f"  classes: In={flags.in_class} Su={flags.su_class} Bi={flags.bi_class}")
        return 0

    def evaluate(self, model: str, world: str, formula: str, elements: List[str],
                 variables: List[str]) -> int:
        m = self.load(model)
        f = parse_formula(formula, m.signature)
        tuple_ = elements_by_name(m, world, elements)
        value = Evaluator(self.logic, m).evaluate(world, f, tuple_, variables or None)
        if self.as_json:
            self.emit({'logic': str(self.logic), 'world': world, 'formula': formula, 'value': value})
        else:
            print('true' if value else 'false')
        return 0

    def asim(self, left: str, left_world: str, left_tuple: List[str],
             right: str, right_world: str, right_tuple: List[str],
             budget: Optional[int] = None) -> int:
        m1, m2 = self.load(left), self.load(right)
        a = elements_by_name(m1, left_world, left_tuple)
        b = elements_by_name(m2, right_world, right_tuple)
        relation = greatest_asimulation(self.logic, m1, left_world, a, m2, right_world, b, budget)
        result = {
            'logic': str(self.logic),
            'asimulation': relation is not None,
            'positions': len(relation) if relation else 0,
            'explored': relation.explored if relation else 0,
            'bound': position_bound(m1, m2),
        }
        if self.as_json:
            self.emit(result)
        else:
            print('yes' if relation else 'no')
            print(f"  positions: {result['positions']} surviving, {result['explored']} explored "
                  f"(bound {result['bound']})")
        return 0

    def unravel(self, model: str, world: str, mode: str, depth: Optional[int],
                output: Optional[str]) -> int:
        m = self.load(model)
        return self.write_model(unravel(m, world, UnravelMode.parse(mode, depth)), output)

    def quotient(self, model: str, congruence: str, output: Optional[str]) -> int:
        m = self.load(model)
        if congruence == 'diagonal':
            cong = Congruence.diagonal(m)
        elif congruence == 'coarsest':
            cong = coarsest_congruence(m)
        else:
            cong = self._read_congruence(m, congruence)
        return self.write_model(quotient(self.logic, m, cong), output)

    def _read_congruence(self, m: KripkeModel, path: str) -> Congruence:
        """JSON file {world: [[a, b], ...]} of related element names"""
        try:
            data = json.loads(Path(path).read_text(encoding='utf-8'))
        except (OSError, json.JSONDecodeError) as e:
            raise UsageError(f"cannot read congruence file {path}: {e}") from e
        pairs = [(m.element(w, a), m.element(w, b)) for w, related in data.items() for a, b in related]
        return Congruence.from_pairs(m, pairs)

    def star(self, model: str, world: str, output: Optional[str]) -> int:
        s = star_expand(self.load(model), world)
        for a in s.base.all_elements():
            print(f"  {a}: {s.plus(a)} / {s.minus(a)}", file=sys.stderr)
        return self.write_model(s.model, output)

    def injectivize(self, model: str, output: Optional[str]) -> int:
        return self.write_model(injectivize(load_model(config.fixture_path(model))), output)

    def diff_logics(self, sentences: List[str], corpus_dir: Optional[str], seeds: int) -> int:
        if not sentences:
            raise UsageError("no sentences given (use --sentence-file or --sentence)")
        report = compare_sentences(sentences, seeds=seeds, corpus_dir=corpus_dir, seed=self.seed)
        stats = LogicComparer.get_stats(report)
        print(self.report_generator.generate_diff_report(report, stats, as_json=self.as_json))
        return report.exit_code

    def run_suite(self, name: str, count: Optional[int]) -> int:
        suite = get_suite(name)(seed=self.seed, count=count, rank=self.rank)
        if not self.as_json:
            print("\n" + "="*60)
            print(f"RUNNING {name.upper()}")
            print("="*60)
            print(f"Started at: {datetime.now().strftime('%Y-%m-%d %H:%M:%S')}")
        report = suite.run()
        print(self.report_generator.generate_suite_report(report, as_json=self.as_json))
        return report.exit_code

    def list_suites(self) -> int:
        if self.as_json:
            self.emit({name: SUITES[name].description for name in sorted(SUITES)})
            return 0
        for name in sorted(SUITES):
            default = config.suite_defaults.get(name, 100)
            print(f"  {name:24} {default:>4}  {SUITES[name].description}")
        return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--logic', default='IL',
                        help='IL, ILeq, In, Ineq, CD, CDeq, Bi or Bieq (default IL)')
    common.add_argument('--rank', type=int, default=None, help='Rank bound for slices')
    common.add_argument('--seed', type=int, default=None, help='Seed for random generation')
    common.add_argument('--json', action='store_true', help='Machine-readable output')

    parser = argparse.ArgumentParser(description='Intuitionistic Kripke model workbench')
    commands = parser.add_subparsers(dest='command', required=True)

    p = commands.add_parser('validate', parents=[common], help='Check the model laws')
    p.add_argument('model')

    p = commands.add_parser('eval', parents=[common], help='Evaluate a formula at a world')
    p.add_argument('--model', required=True)
    p.add_argument('--world', required=True)
    p.add_argument('--formula', required=True)
    p.add_argument('--tuple', default='', help='Comma-separated element names at the world')
    p.add_argument('--variables', default='', help='Variables for the tuple (default x1..xn)')

    p = commands.add_parser('asim', parents=[common], help='Decide asimulation existence')
    p.add_argument('left')
    p.add_argument('left_world')
    p.add_argument('right')
    p.add_argument('right_world')
    p.add_argument('--left-tuple', default='')
    p.add_argument('--right-tuple', default='')
    p.add_argument('--budget', type=int, default=None)

    p = commands.add_parser('unravel', parents=[common], help='Unravel a model from a world')
    p.add_argument('model')
    p.add_argument('world')
    p.add_argument('--mode', default='strict', help="'strict' or 'bounded:k'")
    p.add_argument('--depth', type=int, default=None)
    p.add_argument('--output', default=None)

    p = commands.add_parser('quotient', parents=[common], help='Quotient by a congruence')
    p.add_argument('model')
    p.add_argument('--congruence', default='coarsest',
                   help="'diagonal', 'coarsest' or a JSON file of related pairs")
    p.add_argument('--output', default=None)

    p = commands.add_parser('star', parents=[common], help='Star expansion at a world')
    p.add_argument('model')
    p.add_argument('world')
    p.add_argument('--output', default=None)

    p = commands.add_parser('injectivize', parents=[common], help='Injectivize a model')
    p.add_argument('model')
    p.add_argument('--output', default=None)

    p = commands.add_parser('diff-logics', parents=[common], help='Compare sentences across logics')
    p.add_argument('--sentence-file', default=None)
    p.add_argument('--sentence', action='append', default=[])
    p.add_argument('--corpus-dir', default=None)
    p.add_argument('--seeds', type=int, default=20, help='Random models per class')

    p = commands.add_parser('suite', parents=[common], help='Run a property suite')
    p.add_argument('name', nargs='?')
    p.add_argument('--count', type=int, default=None)
    p.add_argument('--list', action='store_true', help='List the registered suites')

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point"""
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=config.log_level.upper(), format='%(message)s')

    start_time = time.time()
    if not config.validate():
        print("✗ Configuration validation failed", file=sys.stderr)
        return 2

    try:
        bench = Workbench(Logic.parse(args.logic), args.rank, args.seed, args.json)
        command = args.command

        if command == 'validate':
            return bench.validate(args.model)
        if command == 'eval':
            return bench.evaluate(args.model, args.world, args.formula,
                                  _names(args.tuple), _names(args.variables))
        if command == 'asim':
            return bench.asim(args.left, args.left_world, _names(args.left_tuple),
                              args.right, args.right_world, _names(args.right_tuple), args.budget)
        if command == 'unravel':
            return bench.unravel(args.model, args.world, args.mode, args.depth, args.output)
        if command == 'quotient':
            return bench.quotient(args.model, args.congruence, args.output)
        if command == 'star':
            return bench.star(args.model, args.world, args.output)
        if command == 'injectivize':
            return bench.injectivize(args.model, args.output)
        if command == 'diff-logics':
            sentences = list(args.sentence)
            if args.sentence_file:
                sentences.extend(read_sentences(args.sentence_file))
            return bench.diff_logics(sentences, args.corpus_dir, args.seeds)
        if command == 'suite':
            if args.list:
                return bench.list_suites()
            if not args.name:
                raise UsageError("suite name required (see suite --list)")
            code = bench.run_suite(args.name, args.count)
            if not args.json:
                print(f"Finished in {time.time() - start_time:.2f} seconds")
            return code
        raise UsageError(f"unknown command '{command}'")

    except WorkbenchError as e:
        print(f"✗ {type(e).__name__}: {e}", file=sys.stderr)
        return e.exit_code
    except OSError as e:
        print(f"✗ {e}", file=sys.stderr)
        return 2


if __name__ == '__main__':
    sys.exit(main())
