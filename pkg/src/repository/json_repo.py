"""
JSON Report Repository
Persists verification report entries to a JSON file, keeping file access out
of the engine and the CLI.
"""
import json
import logging
from pathlib import Path
from typing import Callable, Generic, Iterable, List, Optional, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar('T')


class JsonRepository(Generic[T]):
    """
    Generic repository over a JSON file holding a list of objects.

    Type Parameters:
        T: The domain model type this repository manages (e.g. ClaimReport)

    Attributes:
        file_path: Path to the JSON data file
        from_dict: Function to deserialize a dict to the domain model
        to_dict: Function to serialize the domain model to a dict
        id_field: Key identifying an entity inside its dict form
    """

    def __init__(
        self,
        file_path: str,
        from_dict: Callable[[dict], T],
        to_dict: Callable[[T], dict],
        id_field: str = 'claim_id',
    ):
        self.file_path = Path(file_path)
        self.from_dict = from_dict
        self.to_dict = to_dict
        self.id_field = id_field
        self._ensure_file_exists()

    def _ensure_file_exists(self):
        """Create the JSON file with an empty list if it doesn't exist."""
        if not self.file_path.exists():
            self.file_path.parent.mkdir(parents=True, exist_ok=True)
            self._write_all_raw([])

    def _read_all_raw(self) -> List[dict]:
        try:
            with open(self.file_path, 'r', encoding='utf-8') as f:
                data = json.load(f)
        except (json.JSONDecodeError, FileNotFoundError):
            logger.warning("unreadable report file %s, treating as empty", self.file_path)
            return []
        # A full report is stored as {"claims": [...]}
        if isinstance(data, dict):
            return data.get('claims', [])
        return data

    def _write_all_raw(self, data: List[dict]):
        with open(self.file_path, 'w', encoding='utf-8') as f:
            json.dump({'claims': data}, f, indent=2, ensure_ascii=False)

    def get_all(self) -> List[T]:
        return [self.from_dict(item) for item in self._read_all_raw()]

    def get_by_id(self, entity_id: str) -> Optional[T]:
        """
        Retrieve a single entity by its id.

        Returns:
            Domain model instance if found, None otherwise
        """
        for item in self._read_all_raw():
            if item.get(self.id_field) == entity_id:
                return self.from_dict(item)
        return None

    def save(self, entity: T) -> T:
        """Insert an entity, replacing any stored entity with the same id."""
        data = self.to_dict(entity)
        raw_data = [item for item in self._read_all_raw() if item.get(self.id_field) != data.get(self.id_field)]
        raw_data.append(data)
        raw_data.sort(key=lambda item: item.get(self.id_field, ''))
        self._write_all_raw(raw_data)
        return entity

    def replace_all(self, entities: Iterable[T]) -> int:
        """
        Overwrite the file with `entities`.

        Returns:
            Number of entities written
        """
        raw_data = [self.to_dict(entity) for entity in entities]
        self._write_all_raw(raw_data)
        logger.info("wrote %d entries to %s", len(raw_data), self.file_path)
        return len(raw_data)

    def count(self) -> int:
        return len(self._read_all_raw())
