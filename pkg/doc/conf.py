# -*- coding: utf-8 -*-
#
# ArithDyn documentation build configuration file.

import sys, os

# arithdyn is imported by autodoc from the repository root.
sys.path.insert(0, os.path.abspath('..'))

# -- General configuration -----------------------------------------------------

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.mathjax',
              'sphinx.ext.intersphinx']

intersphinx_mapping = {'python': ('https://docs.python.org/3', None),
                       'numpy': ('https://numpy.org/doc/stable', None),
                       'sympy': ('https://docs.sympy.org/latest', None)}

source_suffix = '.rst'
master_doc = 'index'

project = u'ArithDyn'
copyright = u'2026, The ArithDyn Development Team'

# The short X.Y version.
version = '0.1'
# The full version, including alpha/beta/rc tags.
release = '0.1.0'

exclude_patterns = ['_build']

pygments_style = 'sphinx'

# -- Options for HTML output ---------------------------------------------------

html_theme = 'sphinx_rtd_theme'
htmlhelp_basename = 'ArithDyndoc'

# -- Options for LaTeX output --------------------------------------------------

latex_documents = [
  ('index', 'ArithDyn.tex', u'ArithDyn Documentation',
   u'The ArithDyn Development Team', 'manual'),
]

# -- Options for manual page output --------------------------------------------

man_pages = [
    ('index', 'arithdyn', u'ArithDyn Documentation',
     [u'The ArithDyn Development Team'], 1)
]
