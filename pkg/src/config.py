"""Configuration management"""

import os
import json
from typing import Dict
from pathlib import Path


class Config:
    """Workbench configuration"""

    def __init__(self):
        # Base paths
        self.base_dir = Path(__file__).parent.parent
        self.config_dir = self.base_dir / 'config'
        self.fixtures_dir = self.config_dir / 'fixtures'
        self.templates_dir = self.base_dir / 'templates'

        # Bounded theories
        self.rank_bound = int(os.getenv('WORKBENCH_RANK', '3'))
        self.sentence_cap = int(os.getenv('WORKBENCH_SENTENCE_CAP', '200'))
        self.max_variables = int(os.getenv('WORKBENCH_MAX_VARIABLES', '2'))
        self.max_sentence_size = int(os.getenv('WORKBENCH_MAX_SENTENCE_SIZE', '6'))
        self.tuple_cap = int(os.getenv('WORKBENCH_TUPLE_CAP', '2'))

        # Asimulation search
        self.raw_tuple_length = int(os.getenv('WORKBENCH_RAW_TUPLE_LENGTH', '3'))
        self.position_budget = int(os.getenv('WORKBENCH_POSITION_BUDGET', str(2 ** 20)))

        # Random generation
        self.seed = int(os.getenv('WORKBENCH_SEED', '0'))
        self.max_retries = int(os.getenv('WORKBENCH_MAX_RETRIES', '25'))

        self.log_level = os.getenv('WORKBENCH_LOG_LEVEL', 'WARNING')

        settings = self._load_settings()
        self.suite_defaults = settings.get('suites', self._get_default_suites())
        self.fixtures = settings.get('fixtures', self._get_default_fixtures())

    def _load_settings(self) -> Dict:
        """Load suite defaults and the fixture index from JSON"""
        settings_file = self.config_dir / 'workbench.json'

        if not settings_file.exists():
            return {}

        with open(settings_file, 'r') as f:
            return json.load(f)

    def _get_default_suites(self) -> Dict[str, int]:
        """Default case counts per suite"""
        return {
            'cd-separation': 500,
            'equality-separation': 500,
            'monotonicity': 500,
            'substitution': 500,
            'generated-submodel': 500,
            'quantifier-clauses': 200,
            'cutoff': 200,
            'quotient-faithfulness': 0,
            'preservation': 200,
            'hennessy-milner': 0,
            'unravel-asim': 100,
            'quotient': 100,
            'star': 200,
            'injectivize': 100,
            'renaming': 200,
        }

    def _get_default_fixtures(self) -> Dict[str, str]:
        return {
            'FIX-CHAIN': 'fix_chain.json',
            'FIX-CD': 'fix_cd.json',
            'FIX-EQ': 'fix_eq.json',
        }

    def fixture_path(self, name: str) -> Path:
        """Resolve a fixture name (FIX-CD) or a plain path to a file"""
        if name in self.fixtures:
            return self.fixtures_dir / self.fixtures[name]
        return Path(name)

    def caps(self) -> Dict[str, int]:
        """Approximation levels printed in every report header"""
        return {
            'rank': self.rank_bound,
            'sentences': self.sentence_cap,
            'variables': self.max_variables,
            'sentence_size': self.max_sentence_size,
            'tuple_length': self.tuple_cap,
            'raw_tuple_length': self.raw_tuple_length,
        }

    def validate(self) -> bool:
        """Validate configuration values"""
        errors = []

        if self.rank_bound < 0:
            errors.append("WORKBENCH_RANK must be non-negative")

        if self.sentence_cap < 1:
            errors.append("WORKBENCH_SENTENCE_CAP must be positive")

        if self.max_variables < 1:
            errors.append("WORKBENCH_MAX_VARIABLES must be positive")

        if self.position_budget < 1:
            errors.append("WORKBENCH_POSITION_BUDGET must be positive")

        if not self.fixtures_dir.exists():
            errors.append(f"fixtures directory missing: {self.fixtures_dir}")

        if errors:
            print("Configuration errors:")
            for error in errors:
                print(f"  - {error}")
            return False

        return True


# Global config instance
config = Config()
