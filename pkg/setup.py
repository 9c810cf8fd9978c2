#!/usr/bin/env python
from setuptools import setup, find_packages

with open('README.rst', 'r') as f:
    long_description = f.read()

setup(
    name='polythresh',
    version='0.1',
    description='Threshold phenomena for beta and beta-prime random polytopes',
    long_description=long_description,
    long_description_content_type='text/x-rst',
    python_requires='>=3.11',
    install_requires=[
        'numpy>=1.24',
        'scipy>=1.10'
    ],
    extras_require={
        'tests': ['pytest>=7']
    },
    entry_points={
        'console_scripts': ['polythresh = polythresh.experiments.cli:main']
    },
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Education',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: MIT License',
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3 :: Only',
        'Programming Language :: Python :: 3.11',
        'Topic :: Scientific/Engineering :: Mathematics',
        'Typing :: Typed'
    ],
    keywords=[
        'random polytopes',
        'convex hull',
        'threshold',
        'beta distribution',
        'monte carlo',
        'stochastic geometry'
    ],
    packages=find_packages('src'),
    package_dir={'': 'src'}
)
