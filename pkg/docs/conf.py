# Configuration file for the Sphinx documentation builder.
#
# https://www.sphinx-doc.org/en/master/usage/configuration.html

import ast
import logging
import os
import sys
from pathlib import Path

logging.basicConfig(level=logging.INFO, format="%(levelname)s: %(message)s")

sys.path.insert(0, os.path.abspath(".."))

project = 'nfoldlib'
copyright = '2026, nfoldlib developers'
author = 'nfoldlib developers'

templates_path = ['_templates']
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store', 'tests']

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.mathjax',
    'sphinx.ext.napoleon',
    'myst_parser',
]

myst_url_schemes = ["http", "https", ""]

source_suffix = {
    '.rst': 'restructuredtext',
    '.md': 'markdown',
}

html_theme = 'sphinx_rtd_theme'

## -- One rst page per package, listing what its __init__.py exports --

PACKAGE = 'nfoldlib'
source_dir = Path(__file__).resolve().parent.parent / PACKAGE
target_dir = Path(__file__).resolve().parent


def package_exports(init_file):
    """Names imported relatively in `init_file`, in order, and the first line of its docstring."""
    tree = ast.parse(init_file.read_text(encoding='utf-8'))
    names = [alias.name for node in ast.iter_child_nodes(tree)
             if isinstance(node, ast.ImportFrom) and node.level > 0 for alias in node.names]
    docstring = ast.get_docstring(tree) or ''
    return names, docstring.split('\n', 1)[0]


def write_package_page(package_dir):
    """Write ``<package>.rst`` unless it exists; hand-written pages are left alone."""
    module_name = f"{PACKAGE}.{package_dir.name}"
    rst_file = target_dir / f"{package_dir.name}.rst"
    if rst_file.exists():
        logging.info(f"{rst_file.name} exists, skipping")
        return
    names, summary = package_exports(package_dir / '__init__.py')
    lines = [f".. currentmodule:: {module_name}", "", module_name, "-" * len(module_name), ""]
    if summary:
        lines += [summary, ""]
    lines += [f".. automodule:: {module_name}", ""]
    if names:
        lines += ["Members", "=======", ""]
        lines += [f".. autofunction:: {module_name}.{name}" if name[0].islower()
                  else f".. autoclass:: {module_name}.{name}\n   :members:" for name in names]
    rst_file.write_text("\n".join(lines) + "\n")
    logging.info(f"wrote {rst_file.name} ({len(names)} members)")


for child in sorted(source_dir.iterdir()):
    if (child / '__init__.py').exists() and child.name != 'algebras':
        write_package_page(child)
