# -*- coding: utf-8 -*-
#
# Sphinx configuration of the ShellSpec documentation.

import os
import sys
sys.path.insert(0, os.path.abspath('../..'))


# -- Project information -----------------------------------------------------

project = u'ShellSpec'
copyright = u'2024, The ShellSpec Authors'
author = u'The ShellSpec Authors'

# The short X.Y version
version = u'1.0'
# The full version, including alpha/beta/rc tags
release = u'1.0.0'


# -- General configuration ---------------------------------------------------

extensions = [
    'sphinx.ext.autodoc',
    'sphinx.ext.napoleon',
    'sphinx.ext.mathjax',
    'sphinx.ext.intersphinx',
    'sphinx.ext.todo',
    'sphinx.ext.viewcode',
    'sphinx.ext.githubpages',
]

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'
exclude_patterns = []
pygments_style = 'sphinx'

# Docstrings follow the Google style.
napoleon_google_docstring = True
napoleon_numpy_docstring = False

autodoc_member_order = 'bysource'


# -- Options for HTML output -------------------------------------------------

on_rtd = os.environ.get('READTHEDOCS', None) == 'True'
if on_rtd:
    html_theme = 'default'
else:
    import sphinx_rtd_theme
    html_theme = 'sphinx_rtd_theme'
    html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]

html_static_path = ['_static']
htmlhelp_basename = 'ShellSpecdoc'


# -- Options for other outputs -----------------------------------------------

latex_documents = [
    (master_doc, 'ShellSpec.tex', u'ShellSpec Documentation',
     author, 'manual'),
]

man_pages = [
    (master_doc, 'shellspec', u'ShellSpec Documentation', [author], 1)
]


# -- Extension configuration -------------------------------------------------

intersphinx_mapping = {
    'python': ('https://docs.python.org/3', None),
    'numpy': ('https://numpy.org/doc/stable', None),
    'scipy': ('https://docs.scipy.org/doc/scipy', None)
}

todo_include_todos = True
