# -*- coding: utf-8 -*-
#
# lif_quant documentation build configuration file.
#
# This file is execfile()d with the current directory set to its containing dir.

import sys, os, glob

try:
    import lif_quant
except ImportError:
    print("lif_quant not installed, using the build directory")
    dn = os.path.abspath(os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))
    builds = glob.glob(os.path.join(dn, "build", "lib*"))
    if builds:
        sys.path.append(builds[0])

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.mathjax']

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = u'lif_quant'
copyright = u'2026, lif_quant developers'

# The short X.Y version.
version = '0.1'
# The full version, including alpha/beta/rc tags.
release = '0.1.0'

exclude_patterns = []
pygments_style = 'sphinx'

html_theme = 'default'
html_static_path = []
htmlhelp_basename = 'lif_quantdoc'

latex_documents = [
  ('index', 'lif_quant.tex', u'lif\\_quant Documentation',
   u'lif\\_quant developers', 'manual'),
]

man_pages = [
    ('index', 'lif_quant', u'lif_quant Documentation',
     [u'lif_quant developers'], 1)
]

autoclass_content = 'both'
