"""Setuptools entry point."""
from setuptools import setup
from setuptools.command.test import test as TestCommand
import sys
import os
import codecs


install_requires = [
    "sympy>=1.5",
    "Unidecode>=0.04.14",
]


class Tox(TestCommand):

    """Tox test command."""

    user_options = [('tox-args=', 'a', "Arguments to pass to tox")]

    def initialize_options(self):
        TestCommand.initialize_options(self)
        self.tox_args = '--recreate'

    def finalize_options(self):
        TestCommand.finalize_options(self)
        self.test_args = []
        self.test_suite = True

    def run_tests(self):
        # tox is only importable once the test eggs are in place
        import tox
        import shlex
        errno = tox.cmdline(args=shlex.split(self.tox_args))
        sys.exit(errno)


tests_require = [
    "pytest>=3.0",
    "pytest-cov",
    "tox",
]

import superbialgebra

dirname = os.path.dirname(__file__)

long_description = (
    codecs.open(os.path.join(dirname, 'README.rst'), encoding='utf-8').read() + '\n' +
    codecs.open(os.path.join(dirname, 'CHANGES.rst'), encoding='utf-8').read()
)


setup(
    name="superbialgebra",
    version=superbialgebra.__version__,
    author="The superbialgebra developers",
    description='Exact computations with gl(1|1) Lie superbialgebras, '
                'their doubles and quantizations',
    long_description=long_description,
    license="MIT",
    packages=['superbialgebra'],
    keywords=['Lie superalgebra', 'superbialgebra', 'Drinfeld double',
              'quantum group', 'sympy'],
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Programming Language :: Python :: 3",
    ] + [("Programming Language :: Python :: %s" % x) for x in "3.8 3.9 3.10 3.11".split()],
    install_requires=install_requires,
    tests_require=tests_require,
    extras_require={
        'test': tests_require,
    },
    entry_points={
        'console_scripts': [
            'superbialgebra = superbialgebra.cli:main',
        ],
    },
    cmdclass={'test': Tox},
)
