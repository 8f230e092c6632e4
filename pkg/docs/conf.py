# Sphinx configuration for the omlbox API reference.

import os
import sys
import sphinx_rtd_theme
sys.path.insert(0, os.path.abspath('../'))

# -- Project information -----------------------------------------------------

project = 'OMLBox'
copyright = '2026, OMLBoxTeam'
author = 'OMLBoxTeam'
release = '0.1.0'

# -- General configuration ---------------------------------------------------

extensions = ['sphinx.ext.viewcode', 'sphinx.ext.autodoc', 'sphinx.ext.napoleon', 'sphinx.ext.mathjax']
templates_path = ['_templates']
exclude_patterns = []

source_suffix = ['.rst', '.md']
autoclass_content = "both"

# napoleon
napoleon_google_docstring = True
napoleon_use_admonition_for_notes = True

# -- Options for HTML output -------------------------------------------------

html_theme = 'sphinx_rtd_theme'
html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]
