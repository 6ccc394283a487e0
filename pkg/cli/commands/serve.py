import typer
import uvicorn
from core.config import settings


def serve_command(
        host: str = typer.Option(settings.HOST, "--host"),
        port: int = typer.Option(settings.PORT, "--port"),
        reload: bool = typer.Option(False, "--reload"),
):
    """Serve the read-only HTTP API."""
    uvicorn.run("api.app:app", host=host, port=port, reload=reload)
