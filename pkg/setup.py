#!/usr/bin/env python3
from setuptools import setup, find_packages

setup(
    name="heiscat",
    version="1.0",
    description="Exact computer algebra for the Heisenberg category Heis_k",
    packages=find_packages(exclude=["tests"]),
    install_requires=[
        "numpy>=1.16",
        "sympy>=1.12",
    ],
    extras_require={
        "tests": ["pytest>=6", "hypothesis>=6"],
    },
    entry_points={
        "console_scripts": ["heiscat = heiscat.startup:main"],
    },
    package_data={"heiscat": ["config/*.json"]},
    include_package_data=True,
)
