from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
from core.config import settings
from api.routes import partitions, series, verify

app = FastAPI(
    title=settings.PROJECT_NAME,
    openapi_url=f"{settings.API_V1_STR}/openapi.json"
)

# Set up CORS
if settings.BACKEND_CORS_ORIGINS:
    app.add_middleware(
        CORSMiddleware,
        allow_origins=[origin.strip() for origin in settings.BACKEND_CORS_ORIGINS.split(",")],
        allow_credentials=True,
        allow_methods=["*"],
        allow_headers=["*"],
    )

app.include_router(partitions.router, prefix=f"{settings.API_V1_STR}/partitions", tags=["Partitions"])
app.include_router(series.router, prefix=f"{settings.API_V1_STR}/series", tags=["Series"])
app.include_router(verify.router, prefix=f"{settings.API_V1_STR}/verify", tags=["Verify"])


@app.get("/")
async def root():
    return {"message": f"{settings.PROJECT_NAME}: hook length combinatorics"}


@app.get("/health")
async def health_check():
    return {"status": "healthy"}
