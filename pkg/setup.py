# Copyright 2024 The tracelab authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
tracelab python setuptools module.

See:
https://packaging.python.org/en/latest/distributing.html
https://github.com/pypa/sampleproject
"""

# Always prefer setuptools over distutils
import setuptools
import os


MYPATH = os.path.abspath(os.path.dirname(__file__))
VERSION_PATH = os.path.join(MYPATH, 'tracelab', 'version.py')


def _version_get():
    with open(VERSION_PATH, 'r', encoding='utf-8') as fv:
        for line in fv:
            if line.startswith('__version__'):
                return line.split('=')[-1].strip()[1:-1]
    raise RuntimeError('VERSION not found!')


# Get the long description from the README file
with open(os.path.join(MYPATH, 'README.md'), encoding='utf-8') as f:
    long_description = f.read()


setuptools.setup(
    name='tracelab',
    version=_version_get(),
    description='Mazurkiewicz traces, string diagrams and monoidal automata',
    long_description=long_description,
    long_description_content_type='text/markdown',
    license='Apache 2.0',

    # For a list of valid classifiers, see https://pypi.org/classifiers/
    classifiers=[
        'Development Status :: 4 - Beta',
        'Intended Audience :: Developers',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: Apache Software License',
        'Natural Language :: English',
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Programming Language :: Python :: 3.11',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],

    keywords='traces concurrency "string diagrams" "monoidal categories" automata',

    packages=setuptools.find_packages(exclude=['docs', 'dist', 'build', 'examples', 'examples.*']),

    include_package_data=True,
    package_data={
        'tracelab.test': ['data/*.json'],
    },

    # See https://packaging.python.org/guides/distributing-packages-using-setuptools/#python-requires
    python_requires='~=3.9',

    # See https://packaging.python.org/en/latest/requirements.html
    install_requires=[
        'networkx>=2.6',
        'numpy>=1.20',
    ],

    extras_require={
        'dev': ['check-manifest', 'coverage', 'hypothesis>=6.0', 'wheel'],
    },

    entry_points={
        'console_scripts': [
            'tracelab=tracelab.__main__:run',
        ],
    },
)
