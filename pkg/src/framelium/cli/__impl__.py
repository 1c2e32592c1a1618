"""
fire dispatch and rich rendering for the framelium command line.
"""

from .__header__ import CLI, RunSummary, DemoRow, EXIT_OK, EXIT_CONFIG, EXIT_NUMERICAL
from . import pipeline
from .runconfig import parse_config

from framelium import __project_manifest__
from framelium.core.config import FrameliumSettings
from framelium.core.errors import ConfigError, FrameliumError
from framelium.manifest import Manifest

import os
import pathlib
import sys
from typing import Any, List, Optional, Tuple, Union

import fire
import numpy as np
from rich.console import Console as RichConsole
from rich.logging import RichHandler
from rich.table import Table as RichTable
from rich.tree import Tree as RichTree

import logging
logger = logging.getLogger(__name__)


class CLIOutputRenderer:
    """Turns XObjects, lists and dicts into rich trees and tables according to their `__style__`."""

    def __init__(self, console: RichConsole = None):
        self.console = console or RichConsole()

    def render(self, obj: Any, name: str = None) -> Any:
        if isinstance(obj, Manifest):
            return self._render_manifest(obj)
        if isinstance(obj, Manifest.XObject):
            return self._render_xobject(obj, name)
        elif isinstance(obj, dict):
            return self._render_dict(obj, name)
        elif isinstance(obj, list):
            return self._render_list(obj, name)
        else:
            return str(obj)

    def _render_manifest(self, manifest: Manifest, tree: Optional[RichTree] = None) -> RichTree:
        name = manifest.location.fqnShort if manifest.location else "framelium"
        version = manifest.version
        status = manifest.status.value if manifest.status.usable else f"[yellow]{manifest.status.value}[/]"
        label = f"[bold]{name}[/] [dim]{version or ''}[/] {status} [dim]{manifest.threadSafety.value}[/] {manifest.description}"
        node = RichTree(label) if tree is None else tree.add(label)
        for child in manifest.children:
            self._render_manifest(child, node)
        return node

    def _render_xobject(self, obj: Manifest.XObject, name: str = None) -> Any:
        style = getattr(obj, "__style__", Manifest.XObject.Style.NONE)
        model_data = obj.model_dump(mode="json")

        if style == Manifest.XObject.Style.TREE:
            tree = RichTree(f"[bold]{name or obj.__class__.__name__}[/]")
            for key, value in model_data.items():
                tree.add(self._render_subnode(key, getattr(obj, key, value)))
            return tree

        elif style == Manifest.XObject.Style.TABLE:
            table = RichTable(title=name or obj.__class__.__name__, show_header=True, show_lines=True)
            fields = list(type(obj).model_fields.keys())
            for field in fields:
                table.add_column(str(field))
            table.add_row(*[self._cell(getattr(obj, field), field) for field in fields])
            return table

        elif style == Manifest.XObject.Style.LINEAR:
            return ", ".join(f"{k}={v}" for k, v in model_data.items())

        return obj.model_dump_json(indent=2)

    def _cell(self, value: Any, field: str) -> str:
        if isinstance(value, (Manifest.XObject, list, dict)):
            return self._stringify_rich(self.render(value, name=field))
        if isinstance(value, float):
            return f"{value:.10g}"
        return str(value)

    def _render_dict(self, data: dict, name: str = None) -> RichTree:
        tree = RichTree(f"[bold]{name or 'Dict'}[/]")
        for key, value in data.items():
            tree.add(self._render_subnode(str(key), value))
        return tree

    def _render_list(self, items: list, name: str = None) -> Union[RichTree, RichTable, str]:
        if not items:
            return f"[dim]{name or 'List'}[/]: []"

        if all(isinstance(x, Manifest.XObject) for x in items):
            first_style = getattr(items[0], "__style__", None)
            if all(getattr(x, "__style__", None) == first_style for x in items):
                if first_style == Manifest.XObject.Style.LINEAR:
                    tree = RichTree(f"[bold]{name or 'List'}[/]")
                    for idx, item in enumerate(items):
                        tree.add(f"[{idx}]: {self._render_xobject(item)}")
                    return tree
                elif first_style == Manifest.XObject.Style.TABLE:
                    table = RichTable(title=name or "List", show_header=True, show_lines=True)
                    fields = list(type(items[0]).model_fields.keys())
                    for field in fields:
                        table.add_column(str(field))
                    for item in items:
                        table.add_row(*[self._cell(getattr(item, field), field) for field in fields])
                    return table

        if all(not isinstance(x, (Manifest.XObject, list, dict)) for x in items):
            return f"[cyan]{name or 'List'}[/]: {', '.join(self._render_inline(x) for x in items)}"

        tree = RichTree(f"[bold]{name or 'List'}[/]")
        for idx, item in enumerate(items):
            tree.add(self._render_subnode(f"[{idx}]", item))
        return tree

    def _render_subnode(self, key: str, value: Any) -> Union[str, RichTree, RichTable]:
        if isinstance(value, Manifest.XObject):
            if getattr(value, "__style__", None) == Manifest.XObject.Style.LINEAR:
                return f"[cyan]{key}[/]: {self._render_xobject(value)}"
            return self.render(value, name=key)
        elif isinstance(value, (dict, list)):
            return self.render(value, name=key)
        return f"[cyan]{key}[/]: {self._render_inline(value)}"

    def _render_inline(self, value: Any) -> str:
        if isinstance(value, complex):
            return f"{value.real:.10g}{value.imag:+.10g}j"
        if isinstance(value, float):
            return f"{value:.10g}"
        return str(value)

    def _stringify_rich(self, rendered: Any) -> str:
        if isinstance(rendered, (RichTree, RichTable)):
            console = RichConsole(width=120)
            with console.capture() as capture:
                console.print(rendered)
            return capture.get().strip()
        return str(rendered)

    def print(self, obj: Any, name: str = None):
        self.console.print(self.render(obj, name))


def configure_logging(level: Optional[str] = None) -> None:
    """Root logger on stderr through rich; library modules only create loggers."""
    level = level or FrameliumSettings.default.log_level
    logging.basicConfig(
        level=level.upper(),
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=RichConsole(stderr=True), show_path=False)],
        force=True,
    )


class CLIImpl(CLI):
    """
    Commands exposed through fire.
    """
    __class_type__ = CLI.ClassType.Impl

    def __init__(self, renderer: Optional[CLIOutputRenderer] = None):
        super().__init__()
        self._renderer = renderer or CLIOutputRenderer()

    def start(self, argv: Optional[List[str]] = None) -> None:
        configure_logging()
        if "PAGER" not in os.environ:
            os.environ["PAGER"] = "cat"

        def serialize(obj):
            if isinstance(obj, (Manifest.XObject, list)):
                self._renderer.print(obj)
                return None
            return obj

        commands = {"run": self.run, "demo": self.demo, "info": self.info}
        fire.Fire(commands, command=argv, name="framelium", serialize=serialize)

    def execute(self, config: Union[str, pathlib.Path], out_dir: Optional[str] = None) -> Tuple[int, Optional[pipeline.ReportDocument]]:
        try:
            text = pathlib.Path(config).read_text(encoding="utf-8")
            parsed = parse_config(text)
        except (FrameliumError, ValueError, OSError) as e:
            logger.error(f"configuration error: {e}")
            return EXIT_CONFIG, None

        # input checks end with the provider build, which reports ConfigError;
        # anything else raised while evaluating is a numerical failure
        try:
            report = pipeline.run(parsed, out_dir)
        except (ConfigError, OSError) as e:
            logger.error(f"configuration error: {e}")
            return EXIT_CONFIG, None
        except (FrameliumError, ValueError, ArithmeticError) as e:
            logger.error(f"numerical failure: {e}")
            return EXIT_NUMERICAL, None
        return EXIT_OK, report

    def run(self, config: str, out_dir: Optional[str] = None, quiet: bool = False) -> Optional[RunSummary]:
        if quiet:
            logging.getLogger().setLevel(logging.WARNING)
        code, report = self.execute(config, out_dir)
        if code != EXIT_OK:
            sys.exit(code)
        if quiet:
            return None
        partition = report.partition
        last = partition.profile[-1]
        return RunSummary(
            provider=partition.provider,
            size=partition.size,
            separation=partition.separation,
            classes=partition.partition.class_count,
            max_degree=partition.max_degree,
            degree_bound=partition.degree_bound,
            bessel_schur=partition.bessel_schur,
            lambda_min=last.lambda_min,
            lambda_max=last.lambda_max,
            warnings=len(report.warnings),
            out_dir=str(out_dir if out_dir is not None else report.config.output.dir),
        )

    def demo(self, seed: int = 0, count: int = 20) -> List[DemoRow]:
        from framelium.feichtinger import Feichtinger
        from framelium.sequences import ExplicitSequence

        rng = np.random.default_rng(seed)
        service = Feichtinger.default
        rows = []
        for trial in range(1, count + 1):
            dimension = int(rng.integers(1, 17))
            length = int(rng.integers(2, 65))
            raw = rng.normal(size=(length, dimension)) + 1j * rng.normal(size=(length, dimension))
            sequence = ExplicitSequence(raw).normalize()
            schur = service.bessel_estimate(sequence, length, Feichtinger.Mode.Schur)
            graph = service.enemy_graph(sequence, length, 0.5)
            bound = service.degree_bound(schur)
            degree = service.max_degree(graph)
            rows.append(DemoRow(
                trial=trial,
                length=length,
                dimension=dimension,
                schur=schur,
                max_degree=degree,
                degree_bound=bound,
                classes=service.greedy_partition(graph).class_count,
                holds=degree <= bound,
            ))
        logger.info(f"demo seed={seed}: bound held in {sum(r.holds for r in rows)} of {len(rows)} frames")
        return rows

    def info(self, package: Optional[str] = None, deps: bool = False) -> None:
        # importing registers every package manifest under the project manifest
        import framelium.spectral, framelium.sequences, framelium.kernels, framelium.feichtinger  # noqa: F401
        manifest = __project_manifest__ if package is None else __project_manifest__.getManifest(package)
        if manifest is None:
            logger.error(f"no package or class named '{package}'")
            sys.exit(EXIT_CONFIG)
        if deps:
            name = manifest.location.fqnShort if manifest.location else "framelium"
            self._renderer.print(manifest.allDependencies(), name=f"dependencies of {name}")
        else:
            self._renderer.print(manifest)
