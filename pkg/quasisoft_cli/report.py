"""Report assembly and emission in text and JSON form"""

import io
import json
from abc import ABC, abstractmethod

from rich import box
from rich.console import Console
from rich.table import Table

from quasisoft_cli.algebra.core import CayleyTable
from quasisoft_cli.schemas import CayleyBlock, Report


class ReportEmitter(ABC):
    """Turns a report into a byte-stable string"""

    @abstractmethod
    def emit(self, report: Report) -> str:
        pass


class TextEmitter(ReportEmitter):
    """Line-oriented form: "[section]" headers followed by "key = value" lines"""

    def emit(self, report: Report) -> str:
        lines = [f"status = {report.status}"]
        for section in report.sections:
            lines.append("")
            lines.append(f"[{section.title}]")
            lines.extend(f"{e.key} = {e.value}" for e in section.entries)
        for block in report.tables:
            lines.append("")
            lines.append(render_block(block).rstrip("\n"))
        if report.counterexamples:
            lines.append("")
            lines.append("[counterexamples]")
            for finding in report.counterexamples:
                witness = ", ".join(f"{k}={v}" for k, v in finding.witness.items())
                suffix = f" ({witness})" if witness else ""
                lines.append(f"{finding.battery}: {finding.message}{suffix}")
        return "\n".join(lines)


class JsonEmitter(ReportEmitter):
    """JSON mirror of the report model"""

    def emit(self, report: Report) -> str:
        return json.dumps(report.model_dump(), indent=2, ensure_ascii=False)


def get_emitter(json_output: bool) -> ReportEmitter:
    return JsonEmitter() if json_output else TextEmitter()


def cayley_block(title: str, table: CayleyTable) -> CayleyBlock:
    s = table.symbols
    return CayleyBlock(
        title=title,
        header=list(s),
        rows=[[s[v] for v in row] for row in table.cells.tolist()],
    )


def format_cayley_table(block: CayleyBlock) -> Table:
    """Format an operation table as a rich table.

    Args:
        block: Table title, header symbols and rows

    Returns:
        Configured Rich Table
    """
    table = Table(title=block.title, box=box.ASCII, show_lines=False)
    table.add_column("", style="bold")
    for symbol in block.header:
        table.add_column(symbol, justify="right")
    for symbol, row in zip(block.header, block.rows):
        table.add_row(symbol, *row)
    return table


def render_block(block: CayleyBlock) -> str:
    # fixed width and no colour keep the output identical across terminals
    buffer = io.StringIO()
    console = Console(file=buffer, width=160, color_system=None, force_terminal=False)
    console.print(format_cayley_table(block))
    return buffer.getvalue()
