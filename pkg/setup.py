#!/usr/bin/env python

from os.path import abspath, dirname, join

from setuptools import find_packages, setup

with open(join(dirname(abspath(__file__)), 'satgraph', 'version.py')) as version_file:
    exec(compile(version_file.read(), "version.py", 'exec'))

setup(name='satgraph',
      version=version,
      description="Saturation numbers, extremal constructions and spectral bounds for "
                  "k-edge-connected and k-connected graphs",
      packages=find_packages(include=['satgraph', 'satgraph.*']),
      # 3.8 and up, but not Python 4
      python_requires='~=3.8',
      install_requires=[
          'immutablecollections>=0.9.0',
          'attrs>=19.2.0',
          'pyyaml>=5.1',
          'numpy>=1.17',
          'networkx>=2.4',
      ],
      package_data={'satgraph': ['py.typed']},
      entry_points={
          'console_scripts': ['satgraph=satgraph.cli:main'],
      },
      classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
    ]
      )
