from __future__ import absolute_import
from __future__ import print_function
from __future__ import division

import os

from setuptools import setup, find_packages

install_requires = ['numpy>=1.17.2', 'pyyaml>=5.3.1', 'tqdm>=4.42.1']

setup_requires = []

extras_require = {'tests': ['pytest>=7.0', 'hypothesis>=6.0']}

on_rtd = os.environ.get('READTHEDOCS', None) == 'True'
if on_rtd:
    install_requires.extend(setup_requires)

classifiers = [
    'License :: OSI Approved :: MIT License', 'Operating System :: OS Independent',
    'Programming Language :: Python :: 3', 'Programming Language :: Python :: 3.8',
    'Programming Language :: Python :: 3.9', 'Programming Language :: Python :: 3.10'
]

with open("PYPI.md", "r") as f:
    long_description = f.read()

setup(
    name='omlbox',
    version='0.1.0',
    description='Orthomodular lattices, Sasaki monoids and dynamic algebras, machine-checked on finite instances',
    author='OMLBoxTeam',
    long_description=long_description,
    long_description_content_type="text/markdown",
    python_requires=">=3.8",
    packages=[package for package in find_packages() if package.startswith('omlbox')],
    package_data={'omlbox': ['properties/*.yaml', 'properties/command/*.yaml']},
    include_package_data=True,
    install_requires=install_requires,
    setup_requires=setup_requires,
    extras_require=extras_require,
    entry_points={'console_scripts': ['omlbox=omlbox.quick_start:cli_main']},
    classifiers=classifiers,
    zip_safe=False
)
