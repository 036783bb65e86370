import os

on_rtd = os.environ.get('READTHEDOCS', None) == 'True'

extensions = ['sphinx.ext.autodoc']
templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'
project = 'orbit-atlas'
copyright = '2026, the orbit-atlas developers'
version = '1.0'
release = '1.0.0'
exclude_patterns = ['_build']
pygments_style = 'sphinx'
html_static_path = []
htmlhelp_basename = 'orbit-atlasdoc'
latex_documents = [
  ('index', 'orbit-atlas.tex', 'orbit-atlas Documentation',
   'the orbit-atlas developers', 'manual'),
]
if not on_rtd:
    import sphinx_rtd_theme
    html_theme = 'sphinx_rtd_theme'
    html_theme_path = [sphinx_rtd_theme.get_html_theme_path()]
