#!/usr/bin/env python3
# www.jrodal.com

import unittest
import yaml

from abc import ABC
from dataclasses import dataclass, field
from typing import Any, Callable, ClassVar

from forge_utils import errors


@dataclass
class TestCaseFromManifest:
    args: list[Any] = field(default_factory=list)
    kwargs: dict[str, Any] = field(default_factory=dict)
    output: Any = None
    raises: str | None = None
    name: str | None = None

    @classmethod
    def parse_manifest(
        cls, manifest_path: str
    ) -> dict[str, list["TestCaseFromManifest"]]:
        with open(manifest_path) as f:
            manifest = yaml.safe_load(f) or {}
        return {
            section: [cls(**test_case) for test_case in test_cases or []]
            for section, test_cases in manifest.items()
        }

    @property
    def label(self) -> str:
        return self.name or ", ".join(map(str, self.args))


def to_plain(value: Any) -> Any:
    if hasattr(value, "to_plain"):
        return value.to_plain()
    if isinstance(value, (list, tuple)):
        return [to_plain(v) for v in value]
    if isinstance(value, dict):
        return {str(k): to_plain(v) for k, v in value.items()}
    return value


class ManifestTestCase(unittest.TestCase, ABC):
    """Runs every `{section: [cases]}` entry of a YAML manifest against `_OPERATIONS[section]`."""

    _OPERATIONS: ClassVar[dict[str, Callable[..., Any]]]
    _MANIFEST_PATH: ClassVar[str]

    def setUp(self) -> None:
        if not hasattr(self, "_MANIFEST_PATH"):
            self.skipTest("manifest base class")
        self.testcases = TestCaseFromManifest.parse_manifest(self._MANIFEST_PATH)

    def test_sections_have_operations(self) -> None:
        for section in self.testcases:
            with self.subTest(section=section):
                self.assertIn(section, self._OPERATIONS)

    def test_no_none_outputs(self) -> None:
        for section, tests in self.testcases.items():
            for test in tests:
                with self.subTest(name=f"{section}: {test.label}"):
                    self.assertTrue(
                        test.output is not None or test.raises is not None,
                        msg=f"Test {test.label} has neither an output nor an error",
                    )

    def test_execute_manifest(self) -> None:
        for section, tests in self.testcases.items():
            operation = self._OPERATIONS[section]
            for test in tests:
                name = f"{section}: {test.label}"
                with self.subTest(name=name):
                    if test.raises is not None:
                        with self.assertRaises(getattr(errors, test.raises)):
                            operation(*test.args, **test.kwargs)
                        continue

                    solution = to_plain(operation(*test.args, **test.kwargs))
                    expected_output = test.output
                    self.assertEqual(
                        expected_output,
                        solution,
                        f"Test {name}: {expected_output=}, {solution=}",
                    )
