#! /usr/bin/env python

from configparser import ConfigParser
from pathlib import Path

from setuptools import setup
from setuptools.config import read_configuration

setup_cfg = Path(__file__).parent.joinpath('setup.cfg')
config = read_configuration(setup_cfg)

# Newer setuptools drops `tests_require` from the parsed configuration,
# so read it directly from setup.cfg.
_raw = ConfigParser()
_raw.read(setup_cfg)
tests_require = [
    line.strip()
    for line in _raw.get('options', 'tests_require', fallback='').splitlines()
    if line.strip()
]

extras_require = {
    'setup': config['options']['setup_requires'],
    'test': tests_require,
    **config['options']['extras_require'],
}
extras_require['all'] = [*extras_require.values()]
use_scm_version = {
    'write_to': Path('edge_elimination', 'version.py'),
    'fallback_version': '0.0.0',
}

setup(extras_require=extras_require, use_scm_version=use_scm_version)
