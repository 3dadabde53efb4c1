"""
Application Layer - Clean Architecture

Use cases orchestrate domain services through abstract ports. Depends only
on the domain layer.

Structure:
- interfaces/: Abstract ports (forecasters, repositories)
- use_cases/: Experiment, synthesis, comparison and modeling use cases
"""
