#!/usr/bin/env python
# -*- coding: utf-8 -*-
from setuptools import setup, find_packages

setup(
    name='chainflow',
    packages=find_packages(exclude=['test*']),
    version=open('VERSION').read().strip(),
    include_package_data=True,
    ext_modules=[],
    zip_safe=False,
    install_requires=['numpy', 'scipy'],
    extras_require={'mpi': ['mpi4py']},
    entry_points={'console_scripts': ['chainflow=chainflow.cli.cli:main']},
    test_suite='test',
    author='Rafael Vescovi',
    author_email='ravescovi@aps.anl.gov',
    description='Multiscale liquid-vapor flow with a particle-chain interface solver in Python.',
    keywords=['multiscale', 'two-phase flow', 'molecular dynamics', 'front tracking', 'kernel surrogate'],
    url='http://github.com/chainflow/chainflow',
    download_url='http://github.com/chainflow/chainflow.git',
    license='BSD-3',
    platforms='Any',
    classifiers=[
        'Development Status :: 4 - Beta',
        'License :: OSI Approved :: BSD License',
        'Intended Audience :: Science/Research',
        'Intended Audience :: Education',
        'Intended Audience :: Developers',
        'Natural Language :: English',
        'Operating System :: OS Independent',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Physics']
)
