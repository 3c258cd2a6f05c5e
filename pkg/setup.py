# Copyright (c) 2026 The balsys Developers
# All rights reserved.
# This software is licensed under the BSD 3-Clause License.
import os

from setuptools import find_packages, setup

requirements = [
    # Configuration files and their validation
    "configobj>=5.0.6",
    # Platform-independent file locking
    "filelock~=3.0",
    # Vectorised field arithmetic
    "numpy>=1.19",
    # Root finding for the certified constants
    "scipy>=1.5",
    # Primality, factorisation and exact integer roots
    "sympy>=1.7",
    # Progress bars
    "tqdm>=4.50.0",
]

description = "Find shapes and generic solutions of balanced linear systems over finite fields."

try:
    this_path = os.path.dirname(os.path.abspath(__file__))
    fn_readme = os.path.join(this_path, "README.md")
    with open(fn_readme) as fh:
        long_description = fh.read()
except OSError:
    long_description = description

setup(
    name="balsys",
    version="0.1.0",
    packages=find_packages(exclude=["tests", "tests.*"]),
    zip_safe=True,
    maintainer="balsys Developers",
    author="balsys Developers",
    description=description,
    long_description=long_description,
    long_description_content_type="text/markdown",
    keywords="finite fields linear systems additive combinatorics cap sets slice rank",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: BSD License",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: Implementation :: CPython",
    ],
    install_requires=requirements,
    python_requires=">=3.8, <4",
    entry_points={"console_scripts": ["balsys = balsys.__main__:main"]},
)
