from __future__ import absolute_import
from __future__ import division
from __future__ import unicode_literals
from __future__ import print_function

from setuptools import setup, find_packages

EXCLUDE_FROM_PACKAGES = ['cauchyid.bin', 'tests']

setup(
    name="cauchyid",
    version="0.1.0",
    packages=find_packages(exclude=EXCLUDE_FROM_PACKAGES),
    package_data={'cauchyid': ['templates/*.txt']},
    scripts=['cauchyid/bin/cauchyid.py'],
    install_requires=['numpy', 'jinja2'],
    extras_require={'tests': ['pytest', 'hypothesis']},
    python_requires='>=3.8',
    entry_points={'console_scripts': [
        'cauchyid = cauchyid.management:execute_from_command_line',
    ]},
)
