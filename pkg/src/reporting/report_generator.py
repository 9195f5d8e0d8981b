"""Render suite and logic-comparison reports"""

import json
from pathlib import Path
from typing import Dict, Optional

from jinja2 import Environment, FileSystemLoader

from src.config import config
from src.processors.logic_comparer import DiffReport
from src.suites.base import SuiteReport


class ReportGenerator:
    """Generate text reports from templates, or JSON"""

    def __init__(self, template_dir: Path = None, failure_limit: int = 20):
        """Initialize report generator with template directory"""
        if template_dir is None:
            template_dir = config.templates_dir

        self.env = Environment(loader=FileSystemLoader(str(template_dir)),
                               keep_trailing_newline=True)
        self.suite_template = self.env.get_template('suite_report.txt')
        self.diff_template = self.env.get_template('diff_report.txt')
        self.failure_limit = failure_limit

    def generate_suite_report(self, report: SuiteReport, as_json: bool = False) -> str:
        """
        Render one suite run.

        Args:
            report: Result of BaseSuite.run
            as_json: Emit report.to_dict() as JSON instead of text

        Returns:
            Report text
        """
        if as_json:
            return json.dumps(report.to_dict(), indent=2)
        return self.suite_template.render(
            report=report,
            header=self._header(report.caps, report.seed),
            rule='=' * 60,
            limit=self.failure_limit,
        )

    def generate_diff_report(self, report: DiffReport, stats: Optional[Dict[str, int]] = None,
                             as_json: bool = False) -> str:
        """Render a logic comparison, optionally with per-logic valid counts"""
        if as_json:
            data = report.to_dict()
            if stats is not None:
                data['stats'] = stats
            return json.dumps(data, indent=2)
        return self.diff_template.render(
            report=report,
            stats=stats,
            header=self._header(report.caps, report.seed),
            rule='=' * 60,
        )

    def _header(self, caps: Dict[str, int], seed: int) -> str:
        """Approximation levels and seed"""
        parts = [f"{key}={value}" for key, value in caps.items()]
        return f"caps: {' '.join(parts)}   seed={seed}"
