"""Sentence deduplication and logic comparison"""
