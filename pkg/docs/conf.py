# -*- coding: utf-8 -*-
"""Sphinx config."""
import sys
import os

sys.path.insert(0, os.path.abspath('..'))

import superbialgebra  # NOQA

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.viewcode',
              'sphinx.ext.mathjax']
templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'superbialgebra'
AUTHOR = 'The superbialgebra developers'
copyright = u'2026, ' + AUTHOR
version = superbialgebra.__version__
release = superbialgebra.__version__

exclude_patterns = ['_build']
pygments_style = 'sphinx'

html_theme = 'default'
html_static_path = ['_static']
htmlhelp_basename = 'superbialgebra-doc'

latex_documents = [
    ('index', 'superbialgebra.tex', u'superbialgebra Documentation', AUTHOR,
     'manual'),
]

man_pages = [
    ('index', 'superbialgebra', u'superbialgebra Documentation',
     [AUTHOR], 1)
]
