import functools
import unittest

from nfoldlib.quiverlang import load_algebra
from nfoldlib.repcore import is_isomorphic
from nfoldlib.stringindec import build_catalog
from nfoldlib.subcat import Subcat


@functools.lru_cache(maxsize=None)
def algebra(name):
    """Bundled algebra, parsed once per test run."""
    return load_algebra(name)


@functools.lru_cache(maxsize=None)
def catalog(name):
    """Catalog of a bundled algebra, built once per test run so censuses are shared between tests."""
    return build_catalog(algebra(name))


def subcat(name, labels):
    return Subcat.from_labels(catalog(name), labels)


class TestHelpers:
    """
    A utility class with common methods for tests.

    This class should be inherited from the unittest.TestCase class when creating a test.
    Example:
        import unittest
        from tests.helpers import TestHelpers

        class TestExample(unittest.TestCase, TestHelpers):
    """

    def AssertBlank(self, function):
        """Assert that the function can be called without raising exceptions."""
        try:
            function()
        except Exception as e:
            self.fail(f"Function {function.__name__} raised an unexpected exception: {e}")

    def assertSubcatLabels(self, C, labels):
        """Assert that a subcategory has exactly the given members, in any order."""
        self.assertEqual(sorted(C.labels), sorted(labels), msg=f"got {C.label()}")

    def assertIsomorphic(self, M, N):
        self.assertEqual(M.dims, N.dims)
        self.assertTrue(is_isomorphic(M, N), msg=f"{M.dims} and {N.dims} are not isomorphic")
