#!/usr/bin/env python
"""Setup.py for arcsmt package"""
from setuptools.command.build_py import build_py
from setuptools import setup, find_packages
import arcsmt


class BuildPyWithPly(build_py):
    """Use ply to generate parsetab and lextab modules."""

    def run(self):
        # importing this forces ply to generate parsetab/lextab
        import arcsmt.text.core

        build_py.run(self)


CLASSIFIERS = [
    'Development Status :: 3 - Alpha',
    'Intended Audience :: Science/Research',
    'License :: OSI Approved :: Apache Software License',
    'Natural Language :: English',
    'Operating System :: OS Independent',
    'Programming Language :: Python',
    'Programming Language :: Python :: 3',
    'Topic :: Scientific/Engineering :: Mathematics',
]

LONG_DESCRIPTION = None
try:
    # read the description if it's there
    with open('README.rst') as desc_f:
        LONG_DESCRIPTION = desc_f.read()
except:
    pass

dev_requirements = [
    'sphinx>=1.3.5',
    'coverage',
    'mock',
    'tox',
    'sympy',
]
# NOTE: dev requirements should be duplicated in pip-dev-req.txt
# for generating documentation on readthedocs.org


setup(
    cmdclass={
        'build_py': BuildPyWithPly,
    },

    name='arcsmt',
    version=arcsmt.__version__,
    author='Emory University Libraries',
    author_email='libsysdev-l@listserv.cc.emory.edu',
    license='Apache License, Version 2.0',
    packages=find_packages(exclude=['test', 'test.*']),

    setup_requires=[
        'ply>=3.8',
    ],
    install_requires=[
        'ply>=3.8',
    ],
    extras_require={
        'dev': dev_requirements
    },
    entry_points={
        'console_scripts': ['arcsmt = arcsmt.cli:main'],
    },
    python_requires='>=3.8',
    description='Exact standard monomial theory for arc space invariants '
                'of the special linear group',
    long_description=LONG_DESCRIPTION,
    classifiers=CLASSIFIERS,
)
