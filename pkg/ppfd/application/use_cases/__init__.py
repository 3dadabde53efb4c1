"""
Use Cases (Application Services)

Each use case takes its collaborators in the constructor and exposes
execute(input_dto) -> output_dto.
"""
