"""Shared configuration, errors and number theory used by every sub-package."""
