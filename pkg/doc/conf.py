# arcsmt documentation build configuration file

import arcsmt

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.intersphinx']

templates_path = ['templates']
exclude_trees = ['build']
html_static_path = ['_static']
source_suffix = '.rst'
master_doc = 'index'

project = 'arcsmt'
copyright = '2011, Emory University Libraries'
version = '%d.%d' % arcsmt.__version_info__[:2]
release = arcsmt.__version__
modindex_common_prefix = ['arcsmt.']

html_theme = 'alabaster'
html_theme_options = {
    'description': 'Standard monomials for arc space invariants'
}

html_sidebars = {
    '**': ['about.html', 'navigation.html', 'searchbox.html'],
}

pygments_style = 'sphinx'

htmlhelp_basename = 'arcsmtdoc'

latex_documents = [
  ('index', 'arcsmt.tex', 'arcsmt Documentation',
   'Emory University Libraries', 'manual'),
]

intersphinx_mapping = {
    'python': ('http://docs.python.org/', None),
}
