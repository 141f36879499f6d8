"""Tests for quasisoft-cli"""
