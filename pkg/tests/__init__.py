"""Test suite for the theoria engine"""
