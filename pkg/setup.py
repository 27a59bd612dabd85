import io
import os

from setuptools import setup, find_packages

# Load the version number
about = {}
here = os.path.abspath(os.path.dirname(__file__))
with open(os.path.join(here, 'qmac', 'version.py')) as f:
    exec(f.read(), about)

# Import the README and use it as the long-description.
with io.open(os.path.join(here, 'README.md'), encoding='utf-8') as f:
    long_description = '\n' + f.read()

setup(
    name='qmac',
    version=about['version'],
    description='Discrete-event simulator of token-based medium access on '
                'the classical channel of multi-core quantum computers',
    long_description=long_description,
    long_description_content_type='text/markdown',
    python_requires='>=3.8',
    install_requires=[
        'numpy>=1.20',
        'pandas>=1.5',
        'networkx>=2.6'
    ],
    packages=find_packages(exclude=['specs', 'specs.*', 'examples',
                                    'examples.*']),
    entry_points={
        'console_scripts': ['qmac=qmac.cli:main']
    },
    include_package_data=True,
    license='MIT',
    classifiers=[
        'License :: OSI Approved :: MIT License',
        'Operating System :: OS Independent',
        'Programming Language :: Python',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Topic :: Scientific/Engineering :: Physics',
    ]
)
