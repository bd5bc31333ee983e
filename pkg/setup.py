from setuptools import find_packages, setup

import codecs
import os
import re


with open("README.md", "r") as file:
    long_description = file.read()


here = os.path.abspath(os.path.dirname(__file__))


def find_version(*file_paths):
    path = os.path.join(here, *file_paths)
    with codecs.open(path, 'r') as fp:
        version_file = fp.read()
        version_match = re.search(r"__version__ = ['\"]([^'\"]*)['\"]",
                                  version_file, re.M)
        if version_match:
            return version_match.group(1)
        raise RuntimeError("Unable to find version string.")


setup(
    name="vqss",
    version=find_version("vqss", "__init__.py"),
    license="Apache-2.0",
    description="Variational stationary states of Lindblad open quantum systems",
    long_description=long_description,
    long_description_content_type="text/markdown",
    classifiers=[
        "Programming Language :: Python :: 3",
        "Operating System :: OS Independent",
        "Topic :: Scientific/Engineering :: Physics"
    ],
    packages=find_packages(exclude=["test", "test.*", "examples", "examples.*"]),
    tests_require=[
        'pytest',
        'mock',
        'jsonschema',
    ],
    install_requires=[
        'numpy>=1.20',
        'scipy>=1.6',
    ],
    extras_require={
        'release': ['twine'],
    },
    entry_points={
        'console_scripts': [
            'vqss=vqss.cli:main',
        ],
    },
    python_requires='>=3.8',
)
