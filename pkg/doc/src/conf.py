# -*- coding: utf-8 -*-
#
# terrace documentation build configuration file.
#
# This file is execfile()d with the current directory set to its containing dir.

import sys, os

# The package lives two levels up; document the source tree, not an
# installed copy.
sys.path.insert(0, os.path.abspath(os.path.join('..', '..')))

# -- General configuration -----------------------------------------------------

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.todo', 'sphinx.ext.ifconfig',
              'sphinx.ext.doctest', 'sphinx.ext.mathjax']

templates_path = ['_templates']

source_suffix = '.rst'

master_doc = 'index'

project = u'terrace'
copyright = u'2026, The terrace developers'

# The short X.Y version.
version = '1.0'
# The full version, including alpha/beta/rc tags.
try:
    import terrace
    release = terrace.__version__
except ImportError:
    print("WARNING: couldn't import terrace to read version.")
    release = version

exclude_trees = ['_build', 'html']

# The reST default role (used for this markup: `text`) to use for all documents.
default_role = 'obj'

pygments_style = 'sphinx'

todo_include_todos = False

rst_epilog = """
.. |M(a)| replace:: :math:`M(a)`
"""

# -- Options for HTML output ---------------------------------------------------

html_theme = 'default'

html_static_path = ['_static']

htmlhelp_basename = 'terracedoc'

# -- Options for LaTeX output --------------------------------------------------

latex_documents = [
  ('index', 'terrace.tex', u'terrace Documentation',
   u'The terrace developers', 'manual'),
]

# -- Options for doctest -------------------------------------------------------

doctest_global_setup = """
from fractions import Fraction
import terrace
from terrace.exact import IntervalR, PolyQ
"""
