# setup.py for heptacol; metadata is declared in pyproject.toml

from setuptools import setup

setup()
