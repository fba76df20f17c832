# framekit/cli/__init__.py
