"""Form codec port."""
from abc import ABC, abstractmethod
from ...domain.entities.bundle import Bundle
from ...domain.entities.form import Form
from ...domain.entities.run_config import OutputFormat
from ...domain.entities.scalar_expr import ScalarExpr
from ...domain.entities.source_form import SourceForm


class FormCodec(ABC):
    """Port for reading and writing forms as text."""
    
    @abstractmethod
    def parse_form(self, src: str, bundle: Bundle) -> Form:
        """
        Parse a form, converting dy generators to the contact basis.
        
        Raises:
            FormSyntaxError: If the text is malformed
            IndexOutOfRangeError: If an index does not fit the bundle
        """
        pass
    
    @abstractmethod
    def parse_scalar(self, src: str, bundle: Bundle) -> ScalarExpr:
        """
        Parse a scalar expression.
        
        Raises:
            FormSyntaxError: If the text is malformed or contains generators
        """
        pass
    
    def parse_source_form(self, src: str, bundle: Bundle) -> SourceForm:
        """Parse Σ Δ_i θ^i ∧ ω."""
        return SourceForm.from_form(self.parse_form(src, bundle))
    
    @abstractmethod
    def print_form(self, form: Form, fmt: OutputFormat = "text") -> str:
        """Render a form; equal forms render byte-identically."""
        pass
    
    @abstractmethod
    def print_scalar(self, expr: ScalarExpr, fmt: OutputFormat = "text") -> str:
        """Render a scalar expression."""
        pass
