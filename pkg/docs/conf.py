# Sphinx configuration for the qmac reference pages

from qmac import version

project = 'qmac'
author = 'qmac developers'
version = version
release = version

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.viewcode']

master_doc = 'index'
exclude_patterns = ['_build']
pygments_style = 'sphinx'

html_theme = 'sphinx_rtd_theme'
htmlhelp_basename = 'qmacdoc'
