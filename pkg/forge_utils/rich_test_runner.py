#!/usr/bin/env python3
# www.jrodal.com

import unittest

from io import StringIO
from typing import Iterable, Type

from rich.console import Console
from rich.table import Table
from rich.traceback import Traceback

from consts import ERR_CONSOLE


class RichTestResult(unittest.TextTestResult):
    def _exc_info_to_string(self, err, _):
        exctype, value, tb = err
        file = StringIO()
        console = Console(file=file, force_terminal=True)
        traceback = Traceback.from_exception(
            exctype, value, tb, suppress=[unittest], show_locals=self.tb_locals
        )
        console.print(traceback)
        return file.getvalue()


class RichTestRunner(unittest.TextTestRunner):
    resultclass = RichTestResult

    def run_cases(
        self,
        test_case_classes: Iterable[Type[unittest.TestCase]],
        console: Console | None = ERR_CONSOLE,
    ) -> bool:
        """Runs each class as its own suite and prints one summary row per class."""
        loader = unittest.defaultTestLoader
        summary = Table(show_header=True, header_style="bold magenta")
        for column in ("Suite", "Run", "Failures", "Errors", "Skipped"):
            summary.add_column(column, justify="left" if column == "Suite" else "right")

        ok = True
        for kls in test_case_classes:
            result = self.run(loader.loadTestsFromTestCase(kls))
            ok &= result.wasSuccessful()
            style = "green" if result.wasSuccessful() else "red"
            summary.add_row(
                f"[{style}]{kls.__name__}[/{style}]",
                str(result.testsRun),
                str(len(result.failures)),
                str(len(result.errors)),
                str(len(result.skipped)),
            )
        if console is not None:
            console.print(summary)
        return ok
