"""
HTML verification summary rendered with Jinja2.
"""
import math
import os
from pathlib import Path
from typing import Any, Dict

from jinja2 import Environment, FileSystemLoader, select_autoescape


def format_number(value: Any) -> str:
    """Six significant digits for floats, everything else as is."""
    if isinstance(value, float):
        if math.isnan(value):
            return "n/a"
        return f"{value:.6g}"
    return str(value)


class HtmlReporter:
    """HTML report generator using Jinja2 templates."""

    def generate_report(self, data: Dict[str, Any], path: Path, config_digest: str) -> str:
        """Render the verification summary: hard invariants, ratio reports and baseline drifts."""
        template_dir = os.path.join(os.path.dirname(__file__), 'templates')
        env = Environment(
            loader=FileSystemLoader(template_dir),
            autoescape=select_autoescape(['html', 'xml'])
        )
        env.filters['number'] = format_number
        template = env.get_template('verify_report.html')

        checks = sorted(data.get("checks", []), key=lambda c: c["identifier"])
        failing = [c["identifier"] for c in checks if not c["passed"]]
        html_content = template.render(
            config_digest=config_digest,
            version=data.get("version", ""),
            passed=not failing,
            failing=failing,
            checks=checks,
            ratios=sorted(data.get("ratios", []), key=lambda r: r["identifier"]),
            baselines=data.get("baselines", []),
        )

        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, 'w', encoding='utf-8') as f:
            f.write(html_content)
        return str(path)
