"""quasisoft-cli: toolkit for finite quasigroups and soft quasigroups"""

__version__ = "0.1.0"
