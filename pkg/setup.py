import os

from setuptools import setup


setup(name='orbit-atlas',
      version='1.0.0',
      zip_safe=False,
      include_package_data=True,
      description=('Orbits, generic multisegments and the tilting fan of '
                   'the equioriented type A quiver'),
      long_description=open(os.path.join(os.path.dirname(__file__),
                                         'README.rst')).read(),
      author='The orbit-atlas developers',
      license='BSD',
      packages=['orbit_atlas',
                'orbit_atlas.management',
                'orbit_atlas.management.commands',
                'orbit_atlas.tests'],
      package_data={'orbit_atlas': ['templates/orbit_atlas/*']},
      test_suite='orbit_atlas.runtests.run_tests',
      entry_points={
          'console_scripts': ['orbit-atlas = orbit_atlas.cli:main'],
      },
      python_requires='>=3.8',
      classifiers=['Development Status :: 4 - Beta',
                   'Environment :: Console',
                   'Framework :: Django',
                   'Framework :: Django :: 4.2',
                   'Intended Audience :: Science/Research',
                   'License :: OSI Approved :: BSD License',
                   'Operating System :: OS Independent',
                   'Programming Language :: Python',
                   'Programming Language :: Python :: 3',
                   'Topic :: Scientific/Engineering :: Mathematics'],
      install_requires=[
          'Django>=4.2',
          'networkx>=2.6',
          'sympy>=1.9',
      ],
      )
