# Sphinx configuration for the satgraph documentation.
#
# Only the settings which differ from the sphinx-quickstart defaults are given here.

import os
import sys
sys.path.insert(0, os.path.abspath('..'))

with open(os.path.join(os.path.dirname(__file__), '..', 'satgraph', 'version.py')) as version_file:
    exec(compile(version_file.read(), "version.py", 'exec'))

extensions = ['sphinx.ext.autodoc',
              'sphinx.ext.autosummary',
              'sphinx.ext.coverage',
              'sphinx.ext.mathjax',
              'sphinx_autodoc_typehints'
              ]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'satgraph'
author = 'the satgraph developers'
release = version
version = '.'.join(release.split('.')[:2])

language = None
exclude_patterns = ['_build', 'Thumbs.db', '.DS_Store', '_templates']

# lets `Graph` and friends in docstrings resolve to cross-references
default_role = 'any'
pygments_style = 'sphinx'
todo_include_todos = False
autosummary_generate = True

html_theme = 'alabaster'
html_static_path = ['_static']
htmlhelp_basename = 'satgraphdoc'

latex_documents = [
    (master_doc, 'satgraph.tex', 'satgraph Documentation', author, 'manual'),
]
man_pages = [
    (master_doc, 'satgraph', 'satgraph Documentation', [author], 1)
]
