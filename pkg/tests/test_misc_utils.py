from pathlib import Path
from unittest import TestCase

from satgraph.misc_utils import pathify, significant_digits, str_list_limited

import pytest


class TestMiscUtils(TestCase):
    def test_limit_str(self):
        self.assertEqual(
            "[(0, 1), (0, 2), (0, 3) and 2 more]",
            str_list_limited([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)], limit=3),
        )
        self.assertEqual("[(0, 1), (0, 2)]", str_list_limited([(0, 1), (0, 2)], limit=3))
        with self.assertRaises(ValueError):
            str_list_limited([], limit=-1)

    def test_pathify(self):
        self.assertEqual(Path("a/b"), pathify("a/b"))
        path = Path("c")
        self.assertIs(path, pathify(path))


@pytest.mark.parametrize(
    "value,expected",
    [
        (2.0, 2.0),
        (2.5615528128088303, 2.56155281281),
        (1.0 / 3.0, 0.333333333333),
        (123456.7890123456, 123456.789012),
        (0.0, 0.0),
    ],
)
def test_significant_digits(value, expected):
    assert significant_digits(value) == expected
