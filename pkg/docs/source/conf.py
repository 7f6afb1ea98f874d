# -*- coding: utf-8 -*-
#
# Sphinx configuration for the korbit documentation.
#
# import os
# import sys
# sys.path.insert(0, os.path.abspath('../../src'))


# -- General configuration ------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.napoleon",
    "sphinx_rtd_theme",
    "sphinx.ext.intersphinx",
    "sphinx.ext.mathjax",
    "sphinx.ext.autosummary",
    "sphinx.ext.viewcode",
]

templates_path = ["_templates"]
source_suffix = ".rst"
master_doc = "index"

project = "korbit"
copyright = "2026, korbit contributors"  # pylint: disable=redefined-builtin
author = "korbit contributors"

# The full version, including alpha/beta/rc tags.
release = "0.1.0"

exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]
pygments_style = "sphinx"
todo_include_todos = False


# -- Options for HTML output ----------------------------------------------

html_theme = "sphinx_rtd_theme"

intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "numpy": ("https://numpy.org/doc/stable/", None),
    "pandas": ("https://pandas.pydata.org/docs/", None),
    "networkx": ("https://networkx.org/documentation/stable/", None),
}

autodoc_default_options = {
    "members": True,
    "member-order": "bysource",
}
