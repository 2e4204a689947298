from typing import Dict, Any
from .base_template import BaseTemplate


class SvgTemplate(BaseTemplate):
    """Template SVG de partições (retalho do plano ou faixa de preMps)."""

    REQUIRED_FIELDS = {
        'partition.svg.j2': ['width', 'height', 'polygons'],
        'strip.svg.j2': ['width', 'height', 'panels'],
    }

    def __init__(self, template_name: str = 'partition.svg.j2'):
        if template_name not in self.REQUIRED_FIELDS:
            raise ValueError(f"Template SVG desconhecido: {template_name}")
        super().__init__(template_name)

    def validate_data(self, data: Dict[str, Any]) -> bool:
        """Valida os campos obrigatórios e as dimensões."""
        required_fields = self.REQUIRED_FIELDS[self.template_name]
        if not all(field in data for field in required_fields):
            return False
        return data['width'] > 0 and data['height'] > 0

    def render(self, data: Dict[str, Any]) -> str:
        """Renderiza o SVG com os dados fornecidos."""
        if not self.validate_data(data):
            raise ValueError("Dados incompletos para geração do SVG")

        return self.load().render(**data)
