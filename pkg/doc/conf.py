"""balsys documentation build configuration file.

This file is executed with the current directory set to its containing dir.
"""

import os
import sys

import sphinx_rtd_theme

sys.path.insert(0, os.path.abspath(".."))

# -- General configuration ------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.autosummary",
    "sphinx.ext.intersphinx",
    "sphinx.ext.mathjax",
    "sphinx.ext.napoleon",
    "sphinxcontrib.programoutput",
]

templates_path = ["_templates"]
source_suffix = ".rst"
master_doc = "index"

project = "balsys"
copyright = "The balsys Developers"
author = "The balsys Developers"

# The short X.Y version.
version = "0.1.0"
# The full version, including alpha/beta/rc tags.
release = "0.1.0"

language = None
exclude_patterns = ["_build"]
pygments_style = "sphinx"
todo_include_todos = False

# -- Options for HTML output ----------------------------------------------

html_theme = "sphinx_rtd_theme"
html_theme_options = {
    # Show the [+] icon to expand headings in the sidebar. Default is True.
    "collapse_navigation": False,
}
html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]
htmlhelp_basename = "balsysdoc"

# -- Options for manual page output ---------------------------------------

man_pages = [(master_doc, "balsys", "balsys Documentation", [author], 1)]

intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "numpy": ("https://numpy.org/doc/stable/", None),
}
