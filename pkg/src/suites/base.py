"""Base suite class with common functionality"""

import logging
import random
import time
from abc import ABC, abstractmethod
from dataclasses import asdict, dataclass, field
from typing import Dict, Iterable, List, Optional, Type

from src.config import config
from src.errors import UsageError, WorkbenchError
from src.kripke.generator import GeneratorParams, generate_random_model
from src.kripke.loader import load_model
from src.kripke.model import KripkeModel


@dataclass
class SuiteFailure:
    case: int
    seed: int
    formula: str
    worlds: str
    expected: str
    got: str


@dataclass
class SuiteReport:
    suite: str
    cases: int
    failures: List[SuiteFailure]
    elapsed: float
    seed: int
    caps: Dict[str, int]
    findings: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def to_dict(self) -> Dict:
        data = asdict(self)
        data['passed'] = self.passed
        return data


SUITES: Dict[str, Type['BaseSuite']] = {}


def register(cls: Type['BaseSuite']) -> Type['BaseSuite']:
    """Class decorator adding a suite to the registry under its name"""
    SUITES[cls.name] = cls
    return cls


def get_suite(name: str) -> Type['BaseSuite']:
    if name not in SUITES:
        raise UsageError(f"unknown suite '{name}' (known: {', '.join(sorted(SUITES))})")
    return SUITES[name]


def case_seed(seed: int, index: int) -> int:
    return (seed * 1000003 + index * 7919 + 1) & 0xFFFFFFFF


class BaseSuite(ABC):
    """Abstract base class for all property suites"""

    name: str = ''
    description: str = ''

    def __init__(self, seed: Optional[int] = None, count: Optional[int] = None,
                 rank: Optional[int] = None):
        self.seed = config.seed if seed is None else seed
        self.count = config.suite_defaults.get(self.name, 100) if count is None else count
        self.rank = config.rank_bound if rank is None else rank
        self.findings: List[str] = []

        self.logger = logging.getLogger(f"{self.__class__.__name__}_{self.name}")
        if not self.logger.handlers:
            handler = logging.StreamHandler()
            handler.setFormatter(logging.Formatter('%(message)s'))
            self.logger.addHandler(handler)
            self.logger.setLevel(logging.INFO)

    @abstractmethod
    def run_case(self, index: int, seed: int) -> List[SuiteFailure]:
        """
        Run one case.

        Args:
            index: Case index
            seed: Case seed derived from the suite seed and the index

        Returns:
            Failures found in this case (empty when the property holds)
        """
        pass

    def case_indices(self) -> Iterable[int]:
        return range(self.count)

    def run(self) -> SuiteReport:
        """Run every case in index order and aggregate a report"""
        start = time.perf_counter()
        self.findings = []
        failures: List[SuiteFailure] = []
        cases = 0

        for index in self.case_indices():
            seed = case_seed(self.seed, index)
            try:
                failures.extend(self.run_case(index, seed))
            except WorkbenchError as e:
                failures.append(self.failure(index, seed, expected='no error',
                                             got=f"{type(e).__name__}: {e}"))
            cases += 1

        elapsed = time.perf_counter() - start
        if failures:
            self.logger.info(f"✗ {self.name}: {len(failures)} failures in {cases} cases")
        else:
            self.logger.info(f"✓ {self.name}: {cases} cases passed")
        for finding in self.findings:
            self.logger.warning(f"  finding: {finding}")
        return SuiteReport(self.name, cases, failures, elapsed, self.seed,
                           dict(config.caps(), rank=self.rank), list(self.findings))

    # Helpers
    # -------------------------------------------------------------------------

    def failure(self, index: int, seed: int, expected: str, got: str,
                formula: str = '', worlds: str = '') -> SuiteFailure:
        return SuiteFailure(index, seed, formula, worlds, str(expected), str(got))

    def draw_model(self, seed: int, **params) -> KripkeModel:
        return generate_random_model(seed, GeneratorParams(**params))

    def fixture(self, name: str) -> KripkeModel:
        return load_model(config.fixture_path(name))

    @staticmethod
    def rng(seed: int) -> random.Random:
        return random.Random(seed)
