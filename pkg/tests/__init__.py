"""Test suite for nmatrix-tableaux"""
